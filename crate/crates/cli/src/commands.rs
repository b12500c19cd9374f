use std::fs;
use std::path::Path;

use serde::Serialize;
use subgame_core::experiments::{
    csv, estimate_lemma1, fit_loglog_slope, measure_error_rate, run_census, run_scaling,
    CensusModel, ErrorRateConfig, Method, ScalingConfig,
};
use subgame_core::{
    deserialize, sample_iid, sample_lsb, serialize, solve_classical_instrumented,
    solve_quantum_with, LsbConfig, Mode, QuantumOptions, QueryLedger, RngSeed, ScanOrder,
};

use crate::args::{
    CensusArgs, CensusGameModel, Cli, Command, ErrorRateArgs, GenArgs, GenModel, Lemma1Args,
    QuantumMode, ScalingArgs, SolveArgs, SolveMethod,
};
use crate::CliError;

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Solve(args) => solve(args),
        Command::Lemma1(args) => lemma1(args),
        Command::Census(args) => census(args),
        Command::ErrorRate(args) => error_rate(args),
        Command::Scaling(args) => scaling(args),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn gen(args: GenArgs) -> Result<(), CliError> {
    let seed = RngSeed::new(args.seed);
    let (game, win_count) = match args.model {
        GenModel::Iid => {
            let p = args
                .p
                .ok_or_else(|| CliError::Usage("--model iid requires --p".into()))?;
            (sample_iid(args.n, p, seed)?, None)
        }
        GenModel::Lsb => {
            let k = args.k.unwrap_or(args.n % 2);
            let sample = sample_lsb(LsbConfig::new(args.n, k), seed)?;
            let wins = sample.labels.win_count();
            (sample.game, Some(wins))
        }
    };
    write_file(&args.output, &serialize(&game))?;
    println!("n: {}", game.n());
    println!("edge_count: {}", game.stats().edge_count);
    if let Some(w) = win_count {
        println!("win_count: {w}");
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct SolveReport {
    n: usize,
    method: &'static str,
    win: u8,
    queries: u64,
    repetitions: Option<usize>,
    seed: Option<u64>,
    trials: usize,
    win_frequency: f64,
}

fn solve(args: SolveArgs) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.input.display())))?;
    let game = deserialize(&text)
        .map_err(|e| CliError::MalformedInput(format!("{}: {e}", args.input.display())))?;
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }

    let report = match args.method {
        SolveMethod::Classical => {
            let mut ledger = QueryLedger::new();
            let table = solve_classical_instrumented(&game, &mut ledger, ScanOrder::Ascending);
            SolveReport {
                n: game.n(),
                method: args.method.name(),
                win: table.win() as u8,
                queries: ledger.gamma_queries(),
                repetitions: None,
                seed: args.seed,
                trials: 1,
                win_frequency: table.win() as u8 as f64,
            }
        }
        SolveMethod::QuantumModel | SolveMethod::QuantumSim => {
            let seed = args
                .seed
                .ok_or_else(|| CliError::Usage("quantum methods require --seed".into()))?;
            let mode = if args.method == SolveMethod::QuantumModel {
                Mode::Model
            } else {
                Mode::Statevector
            };
            let opts = QuantumOptions {
                early_exit: !args.strict,
                ..QuantumOptions::default()
            };
            let root = RngSeed::new(seed);
            let runs = (0..args.trials)
                .map(|t| solve_quantum_with(&game, mode, root.stream(t as u64), &opts))
                .collect::<Result<Vec<_>, _>>()?;
            let wins = runs.iter().filter(|r| r.win_bit).count();
            SolveReport {
                n: game.n(),
                method: args.method.name(),
                win: runs[0].win_bit as u8,
                queries: runs[0].gamma_queries,
                repetitions: Some(runs[0].repetitions),
                seed: Some(seed),
                trials: args.trials,
                win_frequency: wins as f64 / args.trials as f64,
            }
        }
    };

    if args.json {
        let json = serde_json::to_string(&report).expect("report serializes");
        println!("{json}");
    } else {
        println!("method: {}", report.method);
        println!("n: {}", report.n);
        println!("win: {}", report.win);
        println!("queries: {}", report.queries);
        if let Some(r) = report.repetitions {
            println!("repetitions: {r}");
            println!("trials: {}", report.trials);
            println!("win_frequency: {}", report.win_frequency);
        }
    }
    Ok(())
}

fn claim(pass: bool, line: String) -> Result<(), CliError> {
    if pass {
        println!("{line}");
        Ok(())
    } else {
        Err(CliError::ClaimFailed(line))
    }
}

fn lemma1(args: Lemma1Args) -> Result<(), CliError> {
    let k = args.k.unwrap_or(args.n % 2);
    let est = estimate_lemma1(args.n, args.samples, k, RngSeed::new(args.seed))?;
    write_file(&args.output, &csv::lemma1_csv(args.n, k, args.seed, &est))?;
    claim(est.pass, est.verdict("E[Win(flipped)] >= 1/24"))
}

fn census(args: CensusArgs) -> Result<(), CliError> {
    let k = args.k.unwrap_or(args.n % 2);
    let model = match args.model {
        CensusGameModel::Lsb => CensusModel::Lsb,
        CensusGameModel::Zero => CensusModel::Zero,
        CensusGameModel::Iid => CensusModel::Iid(
            args.p
                .ok_or_else(|| CliError::Usage("--model iid requires --p".into()))?,
        ),
    };
    let rows = run_census(args.n, args.samples, k, model, RngSeed::new(args.seed))?;
    write_file(&args.output, &csv::census_csv(&rows))?;

    let mean = rows.iter().map(|r| r.crucial_count as f64).sum::<f64>() / rows.len() as f64;
    let total = subgame_core::bit_count(args.n);
    let fraction = if total == 0 { 0.0 } else { mean / total as f64 };
    if model == CensusModel::Lsb {
        let bound = (args.n * (args.n + 1)) as f64 / 48.0;
        claim(
            mean >= bound,
            format!(
                "{} mean crucial bits >= n(n+1)/48: {mean:.3} vs {bound:.3} (fraction {fraction:.5}, asymptotic 1/24 = {:.5})",
                if mean >= bound { "PASS" } else { "FAIL" },
                1.0 / 24.0
            ),
        )
    } else {
        println!("mean crucial bits: {mean:.3} (fraction {fraction:.5})");
        Ok(())
    }
}

fn error_rate(args: ErrorRateArgs) -> Result<(), CliError> {
    let mode = match args.mode {
        QuantumMode::Model => Mode::Model,
        QuantumMode::Statevector => Mode::Statevector,
    };
    let mut config = ErrorRateConfig::new(args.n, args.games, args.runs_per_game, mode, RngSeed::new(args.seed));
    if let Some(k) = args.k {
        config.k = k;
    }
    let est = measure_error_rate(&config)?;
    write_file(
        &args.output,
        &csv::error_rate_csv(args.n, mode, args.games, args.runs_per_game, args.seed, &est),
    )?;
    claim(est.pass, est.verdict("error rate <= 2/n"))
}

fn scaling(args: ScalingArgs) -> Result<(), CliError> {
    let methods = args
        .methods
        .iter()
        .map(|m| m.parse::<Method>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut config = ScalingConfig::new(args.n_list.clone(), methods.clone(), args.trials, RngSeed::new(args.seed));
    config.k = args.k;
    config.statevector_cap = args.statevector_cap;
    if args.strict {
        config.quantum = QuantumOptions::strict();
    }
    let points = run_scaling(&config)?;
    write_file(&args.output, &csv::scaling_csv(&points, args.seed))?;

    for method in methods {
        let series: Vec<(f64, f64)> = points
            .iter()
            .filter(|p| p.method == method)
            .map(|p| {
                let n = p.n as f64;
                let q = match method {
                    Method::QuantumModel | Method::QuantumStatevector => p.mean_queries / n.log2().max(1.0),
                    _ => p.mean_queries,
                };
                (n, q)
            })
            .collect();
        match fit_loglog_slope(&series) {
            Ok(slope) => {
                let what = match method {
                    Method::QuantumModel | Method::QuantumStatevector => "slope of Q/log2 n",
                    _ => "slope of Q",
                };
                println!("{method}: {what} = {slope:.4}");
            }
            Err(_) => println!("{method}: fewer than 3 sizes, no slope fitted"),
        }
    }
    Ok(())
}
