//! Statevector simulation of Grover search.
//!
//! The standard Grover iteration (phase-flip the marked items, then invert
//! every amplitude about the mean) maps real amplitudes to real amplitudes,
//! so the state is kept as a plain `Vec<f64>` over a power-of-two register.
//! Register indices at or beyond the search domain size are padding: never
//! marked, and a measurement landing there fails verification.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sampling::RngSeed;

/// `sin^2((2k+1) asin(sqrt(t/m)))`: probability that `k` Grover iterations
/// followed by one measurement yield a marked item, with `t` of `m` items
/// marked.
pub fn grover_success_probability(m: usize, t: usize, k: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidArgument("domain size must be at least 1".into()));
    }
    if t > m {
        return Err(Error::InvalidArgument(format!(
            "marked count {t} exceeds domain size {m}"
        )));
    }
    if t == 0 {
        return Ok(0.0);
    }
    if t == m {
        return Ok(1.0);
    }
    let theta = (t as f64 / m as f64).sqrt().asin();
    Ok(((2 * k + 1) as f64 * theta).sin().powi(2))
}

/// Result of one measured Grover run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroverOutcome {
    /// Measured index, present only when verification confirmed it.
    pub found: Option<usize>,
    pub oracle_calls: u64,
    pub verified: bool,
}

/// A Grover register prepared for one search predicate.
///
/// The predicate is tabulated once when the register is built; each
/// iteration then stands for exactly one oracle call.
#[derive(Debug, Clone)]
pub struct GroverSim {
    domain: usize,
    marked: Vec<bool>,
    amps: Vec<f64>,
}

impl GroverSim {
    pub fn new(domain: usize, oracle: impl Fn(usize) -> bool) -> Self {
        assert!(domain >= 1, "empty search domain");
        let size = domain.next_power_of_two();
        let marked = (0..size).map(|x| x < domain && oracle(x)).collect();
        Self {
            domain,
            marked,
            amps: vec![0.0; size],
        }
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    /// Register size `M = 2^ceil(log2 m)`.
    pub fn register_size(&self) -> usize {
        self.amps.len()
    }

    pub fn marked_count(&self) -> usize {
        self.marked.iter().filter(|&&b| b).count()
    }

    /// Uniform superposition, `iterations` Grover iterations, one
    /// measurement, one verifying oracle call.
    pub fn run<R: Rng + ?Sized>(&mut self, iterations: usize, rng: &mut R) -> GroverOutcome {
        let size = self.amps.len();
        self.amps.fill(1.0 / (size as f64).sqrt());
        for _ in 0..iterations {
            let mut sum = 0.0;
            for (a, &m) in self.amps.iter_mut().zip(&self.marked) {
                if m {
                    *a = -*a;
                }
                sum += *a;
            }
            let twice_mean = 2.0 * sum / size as f64;
            for a in &mut self.amps {
                *a = twice_mean - *a;
            }
        }

        let u: f64 = rng.gen();
        let mut acc = 0.0;
        let mut measured = None;
        for (x, a) in self.amps.iter().enumerate() {
            acc += a * a;
            if u < acc {
                measured = Some(x);
                break;
            }
        }
        // Rounding can leave the total a hair under 1.
        let measured = measured.unwrap_or_else(|| {
            self.amps
                .iter()
                .rposition(|a| *a != 0.0)
                .unwrap_or(size - 1)
        });

        let verified = self.marked[measured];
        GroverOutcome {
            found: verified.then_some(measured),
            oracle_calls: iterations as u64 + 1,
            verified,
        }
    }
}

/// One Grover run with a fixed iteration count over `{0..m-1}`.
pub fn grover_search_sim(
    oracle: impl Fn(usize) -> bool,
    m: usize,
    iterations: usize,
    seed: RngSeed,
) -> GroverOutcome {
    GroverSim::new(m, oracle).run(iterations, &mut seed.rng())
}

/// Growth factor of the iteration-count ceiling between BBHT rounds.
pub const BBHT_GROWTH: f64 = 6.0 / 5.0;
/// Per-invocation oracle budget, in units of `sqrt(M)`.
pub const BBHT_BUDGET_FACTOR: f64 = 9.0;

/// Search with an unknown number of solutions: repeated Grover runs with a
/// random iteration count below a slowly growing ceiling. Returns the
/// verified index, if any, and the oracle calls spent. Stops once the spend
/// exceeds `9 sqrt(M)`.
pub fn bbht_search<R: Rng + ?Sized>(sim: &mut GroverSim, rng: &mut R) -> (Option<usize>, u64) {
    let root = (sim.register_size() as f64).sqrt();
    let budget = BBHT_BUDGET_FACTOR * root;
    let mut ceiling = 1.0f64;
    let mut calls = 0u64;
    loop {
        let iterations = rng.gen_range(0..ceiling.ceil() as usize);
        let outcome = sim.run(iterations, rng);
        calls += outcome.oracle_calls;
        if let Some(x) = outcome.found {
            return (Some(x), calls);
        }
        if calls as f64 > budget {
            return (None, calls);
        }
        ceiling = (ceiling * BBHT_GROWTH).min(root);
    }
}
