use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "subgame", version, about = "Subtraction game solver laboratory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random game and write it as a SUBGAME/1 file.
    Gen(GenArgs),
    /// Solve a game file classically or with the simulated quantum solver.
    Solve(SolveArgs),
    /// Estimate the probability that one random bit flip makes an LSB game winning.
    Lemma1(Lemma1Args),
    /// Count crucial bits (flips that invert the game value) of sampled games.
    Census(CensusArgs),
    /// Measure how often the quantum solver disagrees with the exact answer.
    ErrorRate(ErrorRateArgs),
    /// Measure query counts of each method across heap sizes.
    Scaling(ScalingArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenModel {
    Iid,
    Lsb,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub model: GenModel,
    /// Edge probability (iid only).
    #[arg(long)]
    pub p: Option<f64>,
    /// Balance slack (lsb only); defaults to n mod 2.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub seed: u64,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Classical,
    QuantumModel,
    QuantumSim,
}

impl SolveMethod {
    pub fn name(self) -> &'static str {
        match self {
            SolveMethod::Classical => "classical",
            SolveMethod::QuantumModel => "quantum-model",
            SolveMethod::QuantumSim => "quantum-sim",
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(short = 'i', long = "input")]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub method: SolveMethod,
    /// Required for quantum methods.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    /// Never skip the remaining repetitions once a position is found winning.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct Lemma1Args {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub samples: usize,
    /// Defaults to n mod 2.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o', long = "output", default_value = "lemma1.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CensusGameModel {
    Lsb,
    Zero,
    Iid,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub samples: usize,
    /// Defaults to n mod 2.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = CensusGameModel::Lsb)]
    pub model: CensusGameModel,
    /// Edge probability for `--model iid`.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o', long = "output", default_value = "census.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantumMode {
    Model,
    Statevector,
}

#[derive(Debug, Args)]
pub struct ErrorRateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub games: usize,
    #[arg(long)]
    pub runs_per_game: usize,
    #[arg(long, value_enum, default_value_t = QuantumMode::Model)]
    pub mode: QuantumMode,
    /// Defaults to n mod 2.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o', long = "output", default_value = "error_rate.csv")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    /// Comma-separated, strictly ascending heap sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    /// Comma-separated: classical-full, classical-early-exit, quantum-model, quantum-statevector.
    #[arg(long, value_delimiter = ',', required = true)]
    pub methods: Vec<String>,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    /// Defaults to n mod 2 for each n.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Disable early exit in the quantum repetition loop.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, default_value_t = subgame_core::experiments::DEFAULT_STATEVECTOR_CAP)]
    pub statevector_cap: usize,
    #[arg(short = 'o', long = "output", default_value = "scaling.csv")]
    pub output: PathBuf,
}
