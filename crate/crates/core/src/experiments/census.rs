//! Crucial-bit census: how many single-bit flips invert `Win(Γ)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{bit_count, Game};
use crate::sampling::{sample_iid, sample_lsb, LsbConfig, RngSeed};
use crate::solve::{resolve_from, solve_classical};

/// Count of meaningful bits whose flip changes `w_n`.
///
/// Flipping a bit in row `j` leaves `w_0..w_{j-1}` untouched, so each flip
/// re-solves only rows `j..=n`.
pub fn crucial_bit_census(game: &Game) -> usize {
    let base = solve_classical(game);
    let mut scratch = game.clone();
    let mut count = 0;
    for j in 1..=game.n() {
        for i in 0..j {
            scratch.flip(j, i).expect("inside the triangle");
            let mut table = base.clone();
            resolve_from(&scratch, &mut table, j);
            if table.win() != base.win() {
                count += 1;
            }
            scratch.flip(j, i).expect("inside the triangle");
        }
    }
    debug_assert_eq!(&scratch, game);
    count
}

/// Same count, re-solving every flipped game from scratch.
pub fn crucial_bit_census_full(game: &Game) -> usize {
    let win = solve_classical(game).win();
    let mut scratch = game.clone();
    let mut count = 0;
    for j in 1..=game.n() {
        for i in 0..j {
            scratch.flip(j, i).expect("inside the triangle");
            if solve_classical(&scratch).win() != win {
                count += 1;
            }
            scratch.flip(j, i).expect("inside the triangle");
        }
    }
    count
}

/// Where census games come from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CensusModel {
    Lsb,
    /// The all-zero game (fixture).
    Zero,
    Iid(f64),
}

/// One row of `census.csv`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub k: usize,
    pub sample_index: usize,
    pub seed: u64,
    pub crucial_count: usize,
    pub total_bits: usize,
    pub fraction: f64,
}

pub fn run_census(
    n: usize,
    samples: usize,
    k: usize,
    model: CensusModel,
    seed: RngSeed,
) -> Result<Vec<CensusRow>> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    match model {
        CensusModel::Lsb => {
            LsbConfig::new(n, k).win_count_range()?;
        }
        CensusModel::Iid(p) if !(0.0..=1.0).contains(&p) => {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        _ => {}
    }
    (0..samples)
        .into_par_iter()
        .map(|idx| {
            let game_seed = seed.stream(idx as u64).derive(super::lemma1::GAME_TAG);
            let game = match model {
                CensusModel::Lsb => sample_lsb(LsbConfig::new(n, k), game_seed)?.game,
                CensusModel::Zero => Game::zero(n),
                CensusModel::Iid(p) => sample_iid(n, p, game_seed)?,
            };
            let crucial_count = crucial_bit_census(&game);
            let total_bits = bit_count(n);
            Ok(CensusRow {
                n,
                k,
                sample_index: idx,
                seed: seed.seed,
                crucial_count,
                total_bits,
                fraction: if total_bits == 0 {
                    0.0
                } else {
                    crucial_count as f64 / total_bits as f64
                },
            })
        })
        .collect()
}
