//! Monte-Carlo drivers: single-bit sensitivity of LSB games, crucial-bit
//! census, quantum error rate, and query-count scaling.
//!
//! Every driver is a pure function of its configuration. Samples are
//! evaluated in parallel, each on its own seed stream, and aggregated by
//! sample index, so results do not depend on the worker count.

mod census;
pub mod csv;
mod error_rate;
mod estimate;
mod fit;
mod lemma1;
mod scaling;

pub use census::{crucial_bit_census, crucial_bit_census_full, run_census, CensusModel, CensusRow};
pub use error_rate::{measure_error_rate, ErrorRateConfig};
pub use estimate::{Bound, Estimate, SIGMAS};
pub use fit::fit_loglog_slope;
pub use lemma1::{
    estimate_lemma1, exact_flip_win_probability, lemma1_mechanism, lemma1_trials, Lemma1Trial,
    LEMMA1_THRESHOLD,
};
pub use scaling::{run_scaling, Method, ScalingConfig, ScalingPoint, DEFAULT_STATEVECTOR_CAP};
