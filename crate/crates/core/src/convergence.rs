//! Log–log convergence-rate fitting and the report type emitted by the CLI.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Result of a convergence study: observed errors per n, the fitted decay
/// slope of log error vs log n, and pass/fail against a target slope.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub quantity: String,
    pub n: Vec<usize>,
    pub error: Vec<f64>,
    pub fitted_slope: f64,
    pub target_slope: f64,
    /// Fitted constant: exp(intercept) of the least-squares line.
    pub constant_estimate: f64,
    pub pass: bool,
}

/// Least-squares slope and intercept of ln(err) against ln(n).
/// Zero errors are clamped at 1e−300 to keep the fit defined.
pub fn fit_log_slope(ns: &[usize], errs: &[f64]) -> Result<(f64, f64)> {
    if ns.len() != errs.len() || ns.len() < 2 {
        return Err(Error::Parameter("fit_log_slope needs ≥ 2 matching samples".into()));
    }
    if errs.iter().any(|e| !e.is_finite() || *e < 0.0) {
        return Err(Error::Numerical("fit_log_slope: non-finite or negative error sample".into()));
    }
    let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|&e| e.max(1e-300).ln()).collect();
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys.iter()).map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-14 {
        return Err(Error::Numerical("fit_log_slope: degenerate abscissae".into()));
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    Ok((slope, intercept))
}

/// Build a report from samples: pass iff fitted_slope ≤ target_slope.
pub fn make_report(quantity: &str, ns: Vec<usize>, errs: Vec<f64>, target_slope: f64) -> Result<ConvergenceReport> {
    let (slope, intercept) = fit_log_slope(&ns, &errs)?;
    Ok(ConvergenceReport {
        quantity: quantity.to_string(),
        n: ns,
        error: errs,
        fitted_slope: slope,
        target_slope,
        constant_estimate: intercept.exp(),
        pass: slope <= target_slope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_power_law() {
        let ns: Vec<usize> = (1..=10).map(|k| 8 * k).collect();
        let errs: Vec<f64> = ns.iter().map(|&n| 3.0 / (n as f64).powi(2)).collect();
        let (slope, intercept) = fit_log_slope(&ns, &errs).unwrap();
        assert!((slope + 2.0).abs() < 1e-12);
        assert!((intercept.exp() - 3.0).abs() < 1e-10);
    }

    #[test]
    fn report_pass_flag() {
        let ns: Vec<usize> = vec![8, 16, 32, 64];
        let errs: Vec<f64> = ns.iter().map(|&n| 1.0 / n as f64).collect();
        let r = make_report("outer", ns.clone(), errs, -0.9).unwrap();
        assert!(r.pass);
        let errs2: Vec<f64> = ns.iter().map(|&n| 1.0 / (n as f64).sqrt()).collect();
        let r2 = make_report("outer", ns, errs2, -0.9).unwrap();
        assert!(!r2.pass);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(fit_log_slope(&[8], &[0.1]).is_err());
        assert!(fit_log_slope(&[8, 16], &[0.1, f64::NAN]).is_err());
    }
}
