//! Random instance generation.
//!
//! Three families are provided: i.i.d. games where each legal-move bit is an
//! independent coin, the losing/sensitive/balanced ("LSB") family, and the
//! radius-1 Hamming neighbourhood of a game.
//!
//! The LSB generator draws win/lose labels first and then wires moves
//! consistently with them: every winning position gets exactly one move into
//! a losing position, moves into winning positions are fair coins, and
//! losing positions are never connected to each other.

use rand::seq::index;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{bit_count, position_of, Game, WinTable};

/// Root seed plus a stream selector.
///
/// The same `(seed, stream_id)` always yields the same stream; different
/// `stream_id`s under one seed are independent ChaCha streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed {
    pub seed: u64,
    pub stream_id: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RngSeed {
    pub fn new(seed: u64) -> Self {
        Self { seed, stream_id: 0 }
    }

    /// Same root seed, stream `stream_id`.
    pub fn stream(self, stream_id: u64) -> Self {
        Self { stream_id, ..self }
    }

    /// A fresh root seed for a named sub-task. Use this to nest: e.g. the
    /// sample stream of an experiment derives one seed for generating the
    /// game and another for flipping a bit in it.
    pub fn derive(self, tag: u64) -> Self {
        let mixed = splitmix64(self.seed ^ splitmix64(self.stream_id ^ splitmix64(tag)));
        Self::new(mixed)
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_id);
        rng
    }
}

/// Each of the `n(n+1)/2` bits is set independently with probability `p`.
pub fn sample_iid(n: usize, p: f64, seed: RngSeed) -> Result<Game> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    let mut rng = seed.rng();
    Ok(Game::from_fn(n, |_, _| rng.gen_bool(p)))
}

/// Parameters of the LSB generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsbConfig {
    pub n: usize,
    /// Balance slack: the number of winning positions `W` must satisfy
    /// `|n - 2W| <= k`.
    pub k: usize,
    /// Pin the number of winning positions instead of drawing it uniformly
    /// from the allowed interval.
    pub win_count: Option<usize>,
}

impl LsbConfig {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            win_count: None,
        }
    }

    /// Smallest slack that makes `n` feasible: `n mod 2`.
    pub fn minimal(n: usize) -> Self {
        Self::new(n, n % 2)
    }

    /// Inclusive range of admissible winning-position counts. Position `n`
    /// is losing, so at most `n - 1` positions can be winning.
    pub fn win_count_range(&self) -> Result<(usize, usize)> {
        let infeasible = |reason: String| Error::InfeasibleLsb {
            n: self.n,
            k: self.k,
            reason,
        };
        if self.n == 0 {
            return Err(infeasible("n must be at least 1".into()));
        }
        let (n, k) = (self.n as i64, self.k as i64);
        let lo = (n - k + 1).div_euclid(2).max(0);
        let hi = ((n + k).div_euclid(2)).min(n - 1);
        if lo > hi {
            return Err(infeasible(format!(
                "no winning-position count W in 0..={} satisfies |n - 2W| <= k",
                n - 1
            )));
        }
        let (lo, hi) = (lo as usize, hi as usize);
        match self.win_count {
            Some(c) if c < lo || c > hi => Err(infeasible(format!(
                "win_count {c} is outside the admissible range {lo}..={hi}"
            ))),
            Some(c) => Ok((c, c)),
            None => Ok((lo, hi)),
        }
    }
}

/// An LSB game together with the labels it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsbSample {
    pub game: Game,
    pub labels: WinTable,
}

pub fn sample_lsb(config: LsbConfig, seed: RngSeed) -> Result<LsbSample> {
    let (lo, hi) = config.win_count_range()?;
    let n = config.n;
    let mut rng = seed.rng();

    let wins = rng.gen_range(lo..=hi);
    let mut labels = WinTable::all_losing(n);
    for idx in index::sample(&mut rng, n - 1, wins) {
        labels.set(idx + 1, true);
    }

    let mut game = Game::zero(n);
    let mut losing = vec![0usize];
    for j in 1..=n {
        let label_words = labels.words();
        let row = game.row_mut(j);
        let last = row.len() - 1;
        // Fair coin on every move into a winning position.
        for (k, word) in row.iter_mut().enumerate() {
            *word = rng.next_u64() & label_words[k];
        }
        if j % 64 != 0 {
            row[last] &= (1u64 << (j % 64)) - 1;
        }
        if labels.get(j) {
            let target = losing[rng.gen_range(0..losing.len())];
            row[target / 64] |= 1u64 << (target % 64);
        } else {
            losing.push(j);
        }
    }
    Ok(LsbSample { game, labels })
}

/// One flipped bit of a game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitFlip {
    pub j: usize,
    pub i: usize,
    pub old_value: bool,
    pub new_value: bool,
}

/// Flip one meaningful bit chosen uniformly at random.
pub fn flip_random_bit(game: &Game, seed: RngSeed) -> Result<(Game, BitFlip)> {
    if game.n() == 0 {
        return Err(Error::NoBits);
    }
    let flat = seed.rng().gen_range(0..game.bit_count());
    let (j, i) = position_of(flat);
    let mut out = game.clone();
    let old_value = out.flip(j, i)?;
    Ok((
        out,
        BitFlip {
            j,
            i,
            old_value,
            new_value: !old_value,
        },
    ))
}

/// The game followed by all of its single-bit-flip neighbours in flat-index
/// order.
pub fn hamming_ball_1(game: &Game) -> Vec<Game> {
    let mut out = Vec::with_capacity(1 + bit_count(game.n()));
    out.push(game.clone());
    for j in 1..=game.n() {
        for i in 0..j {
            let mut g = game.clone();
            g.flip(j, i).expect("inside the triangle");
            out.push(g);
        }
    }
    out
}
