use serde::{Deserialize, Serialize};

/// Direction of a one-sided bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    /// The mean should be at least the threshold.
    Lower,
    /// The mean should be at most the threshold.
    Upper,
}

/// Sample mean with its standard error, judged against a one-sided bound at
/// three standard errors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
    pub threshold: f64,
    pub bound: Bound,
    pub pass: bool,
}

/// Number of standard errors a one-sided test tolerates.
pub const SIGMAS: f64 = 3.0;

impl Estimate {
    pub fn from_samples(values: &[f64], threshold: f64, bound: Bound) -> Self {
        let samples = values.len();
        let count = samples.max(1) as f64;
        let mean = values.iter().sum::<f64>() / count;
        let stderr = if samples > 1 {
            let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (count - 1.0);
            (var / count).sqrt()
        } else {
            0.0
        };
        let pass = match bound {
            Bound::Lower => mean >= threshold - SIGMAS * stderr,
            Bound::Upper => mean <= threshold + SIGMAS * stderr,
        };
        Self {
            mean,
            stderr,
            samples,
            threshold,
            bound,
            pass,
        }
    }

    /// Verdict line for humans and CI logs.
    pub fn verdict(&self, claim: &str) -> String {
        let (op, slack) = match self.bound {
            Bound::Lower => (">=", "-"),
            Bound::Upper => ("<=", "+"),
        };
        format!(
            "{} {claim}: mean {:.6} {op} {:.6} {slack} 3*{:.6} (samples {})",
            if self.pass { "PASS" } else { "FAIL" },
            self.mean,
            self.threshold,
            self.stderr,
            self.samples
        )
    }
}
