//! Growth shapes of the bounds for `q = +-5 mod 24`.
//!
//! `delta_c(y) = exp(-c (log y)^{3/5} (log log y)^{-1/5})` is the zero-free
//! region saving and `omega(y) = exp((log y)^{1/2} (log log y)^{5/2 + eps})`
//! the conditional one. Neither implied constant is known, so the ratios
//! below are reported, never judged.

use serde::{Deserialize, Serialize};

use super::stream::summatory_lambda_conv_one_many;
use crate::constants::{classify, Branch};
use crate::{Error, Result, Settings};

/// Arbitrary defaults for the unspecified constants.
pub const DEFAULT_C: f64 = 0.2;
pub const DEFAULT_EPSILON: f64 = 0.01;

/// Needs `y > e`.
pub fn delta_c(y: f64, c: f64) -> Result<f64> {
    if y.is_nan() || y <= std::f64::consts::E {
        return Err(Error::Domain(format!("delta_c needs y > e, got {y}")));
    }
    let l = y.ln();
    Ok((-c * l.powf(0.6) * l.ln().powf(-0.2)).exp())
}

/// Needs `y > e`.
pub fn omega(y: f64, eps: f64) -> Result<f64> {
    if y.is_nan() || y <= std::f64::consts::E {
        return Err(Error::Domain(format!("omega needs y > e, got {y}")));
    }
    let l = y.ln();
    Ok((l.sqrt() * l.ln().powf(2.5 + eps)).exp())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticRow {
    pub x: u64,
    pub value: i64,
    /// `|S(x)| / x^{1/4}`.
    pub over_quarter: f64,
    /// `|S(x)| / (x^{1/4} omega(sqrt x))`.
    pub conditional_ratio: f64,
    /// `|S(x)| / (x^{1/2} delta_c(x^{1/4}))`.
    pub unconditional_ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthDiagnostic {
    pub q: u64,
    pub c: f64,
    pub epsilon: f64,
    pub rows: Vec<DiagnosticRow>,
}

/// Reads the bound's `log x^{1/4}` as `(1/4) log x`, i.e. `delta_c` at `x^{1/4}`,
/// which requires `x > e^4`.
pub fn rh_diagnostic(
    q: u64,
    checkpoints: &[u64],
    epsilon: f64,
    c: f64,
    settings: &Settings,
) -> Result<GrowthDiagnostic> {
    if !matches!(classify(q)?.branch, Branch::PlusMinusFiveMod24(_)) {
        return Err(Error::Classification {
            q,
            family: "the growth diagnostic (q = +-5 mod 24)".into(),
        });
    }
    if !(epsilon > 0.0 && epsilon < 0.25) {
        return Err(Error::arg(format!("epsilon must lie in (0, 1/4), got {epsilon}")));
    }
    if c.is_nan() || c <= 0.0 {
        return Err(Error::arg(format!("c must be positive, got {c}")));
    }
    if let Some(&x) = checkpoints.iter().find(|&&x| (x as f64) <= 4f64.exp()) {
        return Err(Error::Domain(format!("checkpoint {x} is not above e^4")));
    }
    let values = summatory_lambda_conv_one_many(q, checkpoints, settings)?;
    let rows = checkpoints
        .iter()
        .zip(values)
        .map(|(&x, value)| {
            let xf = x as f64;
            let a = (value as f64).abs();
            Ok(DiagnosticRow {
                x,
                value,
                over_quarter: a / xf.powf(0.25),
                conditional_ratio: a / (xf.powf(0.25) * omega(xf.sqrt(), epsilon)?),
                unconditional_ratio: a / (xf.sqrt() * delta_c(xf.powf(0.25), c)?),
            })
        })
        .collect::<Result<_>>()?;
    Ok(GrowthDiagnostic { q, c, epsilon, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::summatory::mu_floor_identity;

    #[test]
    fn shapes_are_positive() {
        for y in [3.0, 10.0, 1e4, 1e12] {
            let d = delta_c(y, DEFAULT_C).unwrap();
            assert!(d > 0.0 && d <= 1.0);
            assert!(omega(y, DEFAULT_EPSILON).unwrap() > 1.0);
        }
        assert!(delta_c(2.0, 0.2).is_err());
        assert!(omega(1.0, 0.01).is_err());
    }

    #[test]
    fn q5_values_match_the_identity() {
        let s = Settings::default();
        let d = rh_diagnostic(5, &[10_000, 1_000_000], DEFAULT_EPSILON, DEFAULT_C, &s).unwrap();
        assert_eq!(d.rows[0].value, mu_floor_identity(10_000, 5, &s).unwrap());
        assert_eq!(d.rows[1].value, mu_floor_identity(1_000_000, 5, &s).unwrap());
        for r in &d.rows {
            assert!(r.over_quarter.is_finite() && r.conditional_ratio >= 0.0);
        }
    }

    #[test]
    fn other_branches_are_rejected() {
        let s = Settings::default();
        assert!(matches!(
            rh_diagnostic(7, &[100], 0.01, 0.2, &s),
            Err(Error::Classification { .. })
        ));
        assert!(matches!(rh_diagnostic(5, &[54], 0.01, 0.2, &s), Err(Error::Domain(_))));
        assert!(matches!(
            rh_diagnostic(5, &[100], 0.3, 0.2, &s),
            Err(Error::Argument(_))
        ));
    }
}
