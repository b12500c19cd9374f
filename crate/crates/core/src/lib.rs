//! Solver laboratory for Subtraction games.
//!
//! A Subtraction game on `n` stones is given by a lower-triangular bit
//! matrix: from a heap of `j` stones a player may leave `i < j` stones iff
//! bit `(j, i)` is set, and a player with no legal move loses.
//!
//! The crate provides
//! - [`Game`], [`WinTable`] and the `SUBGAME/1` text format ([`format`]),
//! - exact classical solvers, including one that counts every bit read
//!   ([`solve`]),
//! - random instance generators ([`sampling`]),
//! - a Grover-search-based solver, as an idealised coin model and as an
//!   exact statevector simulation ([`quantum`]),
//! - Monte-Carlo experiment drivers ([`experiments`]).

pub mod error;
pub mod experiments;
pub mod format;
pub mod game;
pub mod quantum;
pub mod sampling;
pub mod solve;

pub use error::{Error, Result};
pub use format::{deserialize, serialize};
pub use game::{bit_count, flat_index, position_of, Game, GameStats, QueryLedger, WinTable};
pub use quantum::{solve_quantum, solve_quantum_with, Mode, QuantumOptions, QuantumRunReport};
pub use sampling::{
    flip_random_bit, hamming_ball_1, sample_iid, sample_lsb, BitFlip, LsbConfig, LsbSample, RngSeed,
};
pub use solve::{
    is_balanced, is_losing, is_sensitive, resolve_from, solve_classical,
    solve_classical_full_scan, solve_classical_instrumented, ScanOrder,
};
