use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::estimate::{Bound, Estimate};
use crate::error::{Error, Result};
use crate::quantum::{solve_quantum_with, Mode, QuantumOptions};
use crate::sampling::{sample_lsb, LsbConfig, RngSeed};
use crate::solve::solve_classical;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorRateConfig {
    pub n: usize,
    pub games: usize,
    pub runs_per_game: usize,
    pub mode: Mode,
    pub k: usize,
    pub seed: RngSeed,
    pub options: QuantumOptions,
}

impl ErrorRateConfig {
    pub fn new(n: usize, games: usize, runs_per_game: usize, mode: Mode, seed: RngSeed) -> Self {
        Self {
            n,
            games,
            runs_per_game,
            mode,
            k: n % 2,
            seed,
            options: QuantumOptions::default(),
        }
    }

    /// Error budget `2/n`.
    pub fn threshold(&self) -> f64 {
        2.0 / self.n as f64
    }
}

/// Pooled fraction of quantum runs whose answer disagrees with the exact
/// one, judged against `2/n` from above.
pub fn measure_error_rate(config: &ErrorRateConfig) -> Result<Estimate> {
    if config.n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n must be at least 2, got {}",
            config.n
        )));
    }
    if config.games == 0 || config.runs_per_game == 0 {
        return Err(Error::InvalidArgument(
            "games and runs_per_game must be at least 1".into(),
        ));
    }
    let lsb = LsbConfig::new(config.n, config.k);
    lsb.win_count_range()?;

    let per_game: Vec<Vec<f64>> = (0..config.games)
        .into_par_iter()
        .map(|g| {
            let game_seed = config.seed.stream(g as u64);
            let game = sample_lsb(lsb, game_seed.derive(0))?.game;
            let truth = solve_classical(&game).win();
            let run_root = game_seed.derive(1);
            (0..config.runs_per_game)
                .into_par_iter()
                .map(|r| {
                    let report =
                        solve_quantum_with(&game, config.mode, run_root.stream(r as u64), &config.options)?;
                    Ok(if report.win_bit == truth { 0.0 } else { 1.0 })
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    let values: Vec<f64> = per_game.into_iter().flatten().collect();
    Ok(Estimate::from_samples(&values, config.threshold(), Bound::Upper))
}
