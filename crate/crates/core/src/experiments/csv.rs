//! CSV renderings of experiment results. Header row, comma separators,
//! `\n` line endings including after the last row.

use std::fmt::Write;

use super::census::CensusRow;
use super::estimate::Estimate;
use super::scaling::ScalingPoint;
use crate::quantum::Mode;

pub const LEMMA1_HEADER: &str = "n,k,samples,seed,mean,stderr,threshold,pass";
pub const CENSUS_HEADER: &str = "n,k,sample_index,seed,crucial_count,total_bits,fraction";
pub const ERROR_RATE_HEADER: &str =
    "n,mode,games,runs_per_game,seed,error_rate,stderr,threshold,pass";
pub const SCALING_HEADER: &str = "n,method,trials,seed,mean_queries,stddev_queries";

pub fn lemma1_csv(n: usize, k: usize, seed: u64, estimate: &Estimate) -> String {
    format!(
        "{LEMMA1_HEADER}\n{n},{k},{},{seed},{},{},{},{}\n",
        estimate.samples, estimate.mean, estimate.stderr, estimate.threshold, estimate.pass
    )
}

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = format!("{CENSUS_HEADER}\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n, r.k, r.sample_index, r.seed, r.crucial_count, r.total_bits, r.fraction
        )
        .unwrap();
    }
    out
}

pub fn error_rate_csv(
    n: usize,
    mode: Mode,
    games: usize,
    runs_per_game: usize,
    seed: u64,
    estimate: &Estimate,
) -> String {
    format!(
        "{ERROR_RATE_HEADER}\n{n},{mode},{games},{runs_per_game},{seed},{},{},{},{}\n",
        estimate.mean, estimate.stderr, estimate.threshold, estimate.pass
    )
}

pub fn scaling_csv(points: &[ScalingPoint], seed: u64) -> String {
    let mut out = format!("{SCALING_HEADER}\n");
    for p in points {
        writeln!(
            out,
            "{},{},{},{seed},{},{}",
            p.n, p.method, p.trials, p.mean_queries, p.stddev_queries
        )
        .unwrap();
    }
    out
}
