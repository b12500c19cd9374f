use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::QueryLedger;
use crate::quantum::{solve_quantum_with, Mode, QuantumOptions};
use crate::sampling::{sample_lsb, LsbConfig, RngSeed};
use crate::solve::{solve_classical_full_scan, solve_classical_instrumented, ScanOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClassicalFull,
    ClassicalEarlyExit,
    QuantumModel,
    QuantumStatevector,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::ClassicalFull,
        Method::ClassicalEarlyExit,
        Method::QuantumModel,
        Method::QuantumStatevector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::ClassicalFull => "classical-full",
            Method::ClassicalEarlyExit => "classical-early-exit",
            Method::QuantumModel => "quantum-model",
            Method::QuantumStatevector => "quantum-statevector",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

/// Mean and spread of the query count of one method at one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingPoint {
    pub n: usize,
    pub method: Method,
    pub trials: usize,
    pub mean_queries: f64,
    pub stddev_queries: f64,
}

pub const DEFAULT_STATEVECTOR_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingConfig {
    pub n_list: Vec<usize>,
    pub methods: Vec<Method>,
    pub trials: usize,
    /// Balance slack for the LSB games; `None` uses `n mod 2` per `n`.
    pub k: Option<usize>,
    pub seed: RngSeed,
    pub quantum: QuantumOptions,
    pub statevector_cap: usize,
}

impl ScalingConfig {
    pub fn new(n_list: Vec<usize>, methods: Vec<Method>, trials: usize, seed: RngSeed) -> Self {
        Self {
            n_list,
            methods,
            trials,
            k: None,
            seed,
            quantum: QuantumOptions::default(),
            statevector_cap: DEFAULT_STATEVECTOR_CAP,
        }
    }
}

/// Query counts of every method on fresh LSB games. Within one `n`, trial
/// `t` uses the same game for every method.
pub fn run_scaling(config: &ScalingConfig) -> Result<Vec<ScalingPoint>> {
    let n_list = &config.n_list;
    if n_list.is_empty() || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "n_list must be non-empty and strictly ascending".into(),
        ));
    }
    if config.trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if config.methods.is_empty() {
        return Err(Error::InvalidArgument("no methods selected".into()));
    }
    let largest = *n_list.last().unwrap();
    if config.methods.contains(&Method::QuantumStatevector) && largest > config.statevector_cap {
        return Err(Error::InvalidArgument(format!(
            "statevector mode is capped at n = {}, got n = {largest}",
            config.statevector_cap
        )));
    }
    for &n in n_list {
        LsbConfig::new(n, config.k.unwrap_or(n % 2)).win_count_range()?;
    }

    let mut points = Vec::new();
    for &n in n_list {
        let lsb = LsbConfig::new(n, config.k.unwrap_or(n % 2));
        let root = config.seed.derive(n as u64);
        let counts: Vec<Vec<u64>> = (0..config.trials)
            .into_par_iter()
            .map(|t| {
                let trial = root.stream(t as u64);
                let game = sample_lsb(lsb, trial.derive(0))?.game;
                config
                    .methods
                    .iter()
                    .map(|&method| {
                        let solver_seed = trial.derive(1);
                        Ok(match method {
                            Method::ClassicalFull => {
                                let mut ledger = QueryLedger::new();
                                solve_classical_full_scan(&game, &mut ledger);
                                ledger.gamma_queries()
                            }
                            Method::ClassicalEarlyExit => {
                                let mut ledger = QueryLedger::new();
                                solve_classical_instrumented(&game, &mut ledger, ScanOrder::Ascending);
                                ledger.gamma_queries()
                            }
                            Method::QuantumModel => {
                                solve_quantum_with(&game, Mode::Model, solver_seed, &config.quantum)?
                                    .gamma_queries
                            }
                            Method::QuantumStatevector => {
                                solve_quantum_with(&game, Mode::Statevector, solver_seed, &config.quantum)?
                                    .gamma_queries
                            }
                        })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;

        for (m, &method) in config.methods.iter().enumerate() {
            let values: Vec<f64> = counts.iter().map(|row| row[m] as f64).collect();
            let len = values.len() as f64;
            let mean = values.iter().sum::<f64>() / len;
            let stddev = if values.len() > 1 {
                (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (len - 1.0)).sqrt()
            } else {
                0.0
            };
            points.push(ScalingPoint {
                n,
                method,
                trials: config.trials,
                mean_queries: mean,
                stddev_queries: stddev,
            });
        }
    }
    Ok(points)
}
