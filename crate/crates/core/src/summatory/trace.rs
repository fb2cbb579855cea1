use serde::{Deserialize, Serialize};

use super::stream::summatory_lambda_conv_one_many;
use crate::constants::{MainTermKind, MainTermParams};
use crate::Settings;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub x: u64,
    /// Exact `S(x)`.
    pub value: i64,
    pub main: f64,
    /// Certified error of `main`; the true residual lies within this of `residual`.
    pub main_error: f64,
    pub residual: f64,
    /// `residual / x^alpha`, one entry per exponent in [`SummatoryTrace::alphas`].
    pub normalized: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummatoryTrace {
    pub q: u64,
    pub kind: MainTermKind,
    pub alphas: Vec<f64>,
    pub rows: Vec<TraceRow>,
    /// Least-squares slope of `log |residual|` against `log x`. A report, not
    /// a claim about the true error exponent.
    pub fitted_exponent: Option<f64>,
}

/// Powers of two from `2^min_exp` up to `max`.
pub fn dyadic_checkpoints(min_exp: u32, max: u64) -> Vec<u64> {
    (min_exp..64).map(|k| 1u64 << k).take_while(|&x| x <= max).collect()
}

/// Slope of the least-squares line through `(log x, log |r|)`, skipping
/// zero residuals; `None` with fewer than two usable points.
pub fn fit_exponent(points: &[(u64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(_, r)| *r != 0.0 && r.is_finite())
        .map(|&(x, r)| ((x as f64).ln(), r.abs().ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Exact `S(x)` at each checkpoint compared with the main term of `params`.
/// An empty `alphas` means the branch default.
pub fn trace(
    params: &MainTermParams,
    checkpoints: &[u64],
    alphas: &[f64],
    settings: &Settings,
) -> Result<SummatoryTrace> {
    let q = params.class.q;
    let alphas = if alphas.is_empty() {
        vec![params.default_alpha()]
    } else {
        alphas.to_vec()
    };
    if let Some(&x) = checkpoints.iter().find(|&&x| (x as f64) < 4f64.exp()) {
        return Err(Error::Domain(format!("checkpoint {x} is below e^4")));
    }
    let values = summatory_lambda_conv_one_many(q, checkpoints, settings)?;
    let mut rows = Vec::with_capacity(values.len());
    for (&x, &value) in checkpoints.iter().zip(&values) {
        let m = params.main_term(x as f64)?;
        let residual = value as f64 - m.value;
        let xf = x as f64;
        rows.push(TraceRow {
            x,
            value,
            main: m.value,
            main_error: m.error,
            residual,
            normalized: alphas.iter().map(|a| residual / xf.powf(*a)).collect(),
        });
    }
    let fitted_exponent = fit_exponent(&rows.iter().map(|r| (r.x, r.residual)).collect::<Vec<_>>());
    Ok(SummatoryTrace {
        q,
        kind: params.kind(),
        alphas,
        rows,
        fitted_exponent,
    })
}
