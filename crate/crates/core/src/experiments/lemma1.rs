//! Single-bit sensitivity of losing LSB games.
//!
//! Draw an LSB game (losing by construction), flip one uniformly random
//! meaningful bit, and record whether the perturbed game is winning. The
//! mean of that indicator is expected to stay at or above 1/24.

use rayon::prelude::*;
use serde::Serialize;

use super::census::crucial_bit_census;
use super::estimate::{Bound, Estimate};
use crate::error::{Error, Result};
use crate::game::{Game, WinTable};
use crate::sampling::{flip_random_bit, sample_lsb, BitFlip, LsbConfig, RngSeed};
use crate::solve::solve_classical;

pub const LEMMA1_THRESHOLD: f64 = 1.0 / 24.0;

/// Tags for seeds derived from one sample's stream.
pub(crate) const GAME_TAG: u64 = 0;
pub(crate) const FLIP_TAG: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma1Trial {
    pub sample_index: usize,
    pub flip: BitFlip,
    /// `Win(Γ')` after the flip.
    pub win_after: bool,
    /// The flip turned on a move between two losing positions `j -> i`,
    /// and the smallest winning position whose unique winning move goes to
    /// `j` is itself reachable from `n`. Such a flip must make the game
    /// winning.
    pub mechanism: bool,
}

/// See [`Lemma1Trial::mechanism`]. `labels` must be the exact solution of
/// the unflipped `game`.
pub fn lemma1_mechanism(game: &Game, labels: &WinTable, flip: &BitFlip) -> bool {
    let n = game.n();
    let (j, i) = (flip.j, flip.i);
    if flip.old_value || labels.get(j) || labels.get(i) {
        return false;
    }
    (j + 1..n)
        .find(|&jp| labels.get(jp) && game.bit(jp, j))
        .is_some_and(|jp| game.bit(n, jp))
}

fn check(n: usize, samples: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    Ok(())
}

pub fn lemma1_trials(n: usize, samples: usize, k: usize, seed: RngSeed) -> Result<Vec<Lemma1Trial>> {
    check(n, samples)?;
    let config = LsbConfig::new(n, k);
    config.win_count_range()?;
    (0..samples)
        .into_par_iter()
        .map(|idx| {
            let stream = seed.stream(idx as u64);
            let sample = sample_lsb(config, stream.derive(GAME_TAG))?;
            let (flipped, flip) = flip_random_bit(&sample.game, stream.derive(FLIP_TAG))?;
            Ok(Lemma1Trial {
                sample_index: idx,
                flip,
                win_after: solve_classical(&flipped).win(),
                mechanism: lemma1_mechanism(&sample.game, &sample.labels, &flip),
            })
        })
        .collect()
}

/// Mean of `Win(Γ')` over `samples` draws, judged against 1/24 from below.
pub fn estimate_lemma1(n: usize, samples: usize, k: usize, seed: RngSeed) -> Result<Estimate> {
    let values: Vec<f64> = lemma1_trials(n, samples, k, seed)?
        .iter()
        .map(|t| f64::from(u8::from(t.win_after)))
        .collect();
    Ok(Estimate::from_samples(&values, LEMMA1_THRESHOLD, Bound::Lower))
}

/// Probability, over a uniformly random meaningful bit, that flipping it
/// changes `Win(Γ)`. For a losing game this is the limit of the estimator
/// conditioned on that game.
pub fn exact_flip_win_probability(game: &Game) -> f64 {
    if game.n() == 0 {
        return 0.0;
    }
    crucial_bit_census(game) as f64 / game.bit_count() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn estimator_measures_flip_probability_of_losing_games() {
        let trials = lemma1_trials(12, 300, 0, RngSeed::new(8)).unwrap();
        assert_eq!(trials.len(), 300);
        for (idx, t) in trials.iter().enumerate() {
            assert_eq!(t.sample_index, idx);
            assert!(t.flip.j <= 12 && t.flip.i < t.flip.j);
            if t.mechanism {
                assert!(t.win_after);
            }
        }
    }

    #[test]
    fn argument_errors() {
        assert!(estimate_lemma1(1, 10, 1, RngSeed::new(0)).is_err());
        assert!(estimate_lemma1(5, 0, 1, RngSeed::new(0)).is_err());
        assert!(matches!(
            estimate_lemma1(5, 10, 0, RngSeed::new(0)),
            Err(Error::InfeasibleLsb { .. })
        ));
    }

    #[test]
    fn deterministic() {
        let a = estimate_lemma1(30, 200, 0, RngSeed::new(4)).unwrap();
        let b = estimate_lemma1(30, 200, 0, RngSeed::new(4)).unwrap();
        assert_eq!(a, b);
    }
}
