//! `zeta(s)` and `zeta'(s)` for real `s > 1`, by direct summation with the
//! tail enclosed between two integrals.

use super::certified::{Certified, CompensatedSum};
use crate::{Error, Result};

/// Arguments must exceed `1 + ZETA_MARGIN`.
pub const ZETA_MARGIN: f64 = 0.1;

/// Largest summation length before giving up with a precision error.
pub const MAX_ZETA_TERMS: u64 = 100_000_000;

// Relative error of one `powf`/`ln` evaluation, generously.
const TERM_REL: f64 = 4.0 * f64::EPSILON;

fn check_args(s: f64, tol: f64) -> Result<()> {
    if !s.is_finite() || s <= 1.0 + ZETA_MARGIN {
        return Err(Error::Domain(format!(
            "zeta needs real s > {}, got {s}",
            1.0 + ZETA_MARGIN
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::arg(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// Sum `term(n)` for `n <= t` and add the midpoint of `[tail(t+1), tail(t)]`,
/// growing `t` until the enclosure is narrower than `tol`.
fn bracketed(s: f64, tol: f64, term: impl Fn(f64) -> f64, tail: impl Fn(f64) -> f64) -> Result<Certified> {
    // t^{-s} is roughly the bracket width; start near where it drops below tol.
    let mut t = (tol.powf(-1.0 / s).ceil() as u64).clamp(16, MAX_ZETA_TERMS);
    loop {
        let tf = t as f64;
        let (hi, lo) = (tail(tf), tail(tf + 1.0));
        let half = 0.5 * (hi - lo).abs();
        if t == MAX_ZETA_TERMS && half > tol {
            return Err(Error::Precision {
                requested: tol,
                achievable: half,
            });
        }
        if half <= 0.5 * tol || t == MAX_ZETA_TERMS {
            let mut acc = CompensatedSum::default();
            for n in (1..=t).rev() {
                acc.add(term(n as f64));
            }
            let mid = 0.5 * (hi + lo);
            acc.add(mid);
            let err = half + acc.rounding_bound(TERM_REL);
            if err > tol {
                return Err(Error::Precision {
                    requested: tol,
                    achievable: err,
                });
            }
            return Ok(Certified::new(acc.total(), err));
        }
        t = (t * 2).min(MAX_ZETA_TERMS);
    }
}

/// `zeta(s)` with a certified absolute error at most `tol`.
pub fn zeta_real(s: f64, tol: f64) -> Result<Certified> {
    check_args(s, tol)?;
    bracketed(s, tol, |n| n.powf(-s), |t| t.powf(1.0 - s) / (s - 1.0))
}

/// `zeta'(s)` with a certified absolute error at most `tol`.
pub fn zeta_prime_real(s: f64, tol: f64) -> Result<Certified> {
    check_args(s, tol)?;
    // log t / t^s decreases for t > e^{1/s}, so the integral comparison is valid
    // from t = 16 on.
    let tail = |t: f64| -t.powf(1.0 - s) * (t.ln() / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    bracketed(s, tol, |n| -n.ln() * n.powf(-s), tail)
}
