use crate::error::{Error, Result};

/// Ordinary least-squares slope of `ln q` against `ln n`.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "need at least 3 points for a log-log fit, got {}",
            points.len()
        )));
    }
    if let Some(&(n, q)) = points.iter().find(|(n, q)| !(*n > 0.0 && *q > 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "log-log fit needs positive coordinates, got ({n}, {q})"
        )));
    }
    let xs: Vec<f64> = points.iter().map(|(n, _)| n.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|(_, q)| q.ln()).collect();
    let len = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / len;
    let my = ys.iter().sum::<f64>() / len;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument(
            "log-log fit needs distinct n values".into(),
        ));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(sxy / sxx)
}
