//! Grover-search-based solver, in an idealised coin model and as an exact
//! statevector simulation.

mod algorithm;
mod grover;

pub use algorithm::{
    ceil_sqrt, grover_is_zero_among, model_charge, model_cost_strict, repetitions, solve_quantum,
    solve_quantum_with, Mode, QuantumOptions, QuantumRunReport,
};
pub use grover::{
    bbht_search, grover_search_sim, grover_success_probability, GroverOutcome, GroverSim,
    BBHT_BUDGET_FACTOR, BBHT_GROWTH,
};
