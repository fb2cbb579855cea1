//! Right-hand sides of the derivative tests for `f(n) = sqrt(x / n^5)` on
//! `[N, 2N]`, with every implied constant set to 1.

use serde::{Deserialize, Serialize};

use crate::arith::roots::checked_pow;

/// Which test the short-interval bound uses for a given `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Range {
    /// `N <= 2 x^{1/10}`: fifth derivative test.
    FifthDerivative,
    /// `2 x^{1/10} < N <= 2 x^{1/6}`: the `X / n^s` bound.
    FilasetaTrifonov,
    /// `N > 2 x^{1/6}`: first derivative test.
    FirstDerivative,
}

impl Range {
    /// Decided on integers: `N^10 <= 1024 x` and `N^6 <= 64 x`.
    pub fn of(n: u64, x: u64) -> Range {
        let le = |e: u32, k: u128| checked_pow(n, e).is_some_and(|p| p <= k * x as u128);
        if le(10, 1024) {
            Range::FifthDerivative
        } else if le(6, 64) {
            Range::FilasetaTrifonov
        } else {
            Range::FirstDerivative
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Range::FifthDerivative => "fifth-derivative",
            Range::FilasetaTrifonov => "filaseta-trifonov",
            Range::FirstDerivative => "first-derivative",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundShapes {
    pub n: u64,
    pub range: Range,
    pub delta: f64,
    /// `N lambda_5^{1/15} + N delta^{1/6} + (delta / lambda_4)^{1/4} + 1`.
    pub fifth_derivative: f64,
    /// `(X N^{3-s})^{1/7} + delta (X N^{59-s})^{1/21}`, `X = sqrt x`, `s = 5/2`.
    pub filaseta_trifonov: f64,
    /// `N lambda_1 + N delta + delta / lambda_1 + 1`.
    pub first_derivative: f64,
    /// `max |f'|` on the window, attained at `N`.
    pub lambda1_at_start: f64,
    /// `|f'(2N)|`; the ratio to `lambda1_at_start` is `2^{7/2}`.
    pub lambda1_at_end: f64,
    /// `N^2 delta <= c3`.
    pub n2_delta_ok: bool,
    /// `N <= X^{1/s}`, i.e. `N^5 <= x`.
    pub n_within_scale: bool,
    /// The shape belonging to `range`.
    pub applicable: f64,
}

/// Bound shapes at window start `n` for the interval `(x, x + y]`.
pub fn bound_shapes(n: u64, x: f64, y: f64, c3: f64) -> BoundShapes {
    let nf = n as f64;
    let delta = y / (nf.powi(5) * x).sqrt();
    let lambda4 = (x * nf.powi(-13)).sqrt();
    let lambda5 = (x * nf.powi(-15)).sqrt();
    let fifth = nf * lambda5.powf(1.0 / 15.0) + nf * delta.powf(1.0 / 6.0) + (delta / lambda4).powf(0.25) + 1.0;
    let big_x = x.sqrt();
    let ft = (big_x * nf.powf(0.5)).powf(1.0 / 7.0) + delta * (big_x * nf.powf(56.5)).powf(1.0 / 21.0);
    let lambda1_at_start = 2.5 * big_x * nf.powf(-3.5);
    let lambda1_at_end = 2.5 * big_x * (2.0 * nf).powf(-3.5);
    let first = nf * lambda1_at_start + nf * delta + delta / lambda1_at_start + 1.0;
    let range = if x.fract() == 0.0 && x <= u64::MAX as f64 {
        Range::of(n, x as u64)
    } else if nf.powi(10) <= 1024.0 * x {
        Range::FifthDerivative
    } else if nf.powi(6) <= 64.0 * x {
        Range::FilasetaTrifonov
    } else {
        Range::FirstDerivative
    };
    let applicable = match range {
        Range::FifthDerivative => fifth,
        Range::FilasetaTrifonov => ft,
        Range::FirstDerivative => first,
    };
    BoundShapes {
        n,
        range,
        delta,
        fifth_derivative: fifth,
        filaseta_trifonov: ft,
        first_derivative: first,
        lambda1_at_start,
        lambda1_at_end,
        n2_delta_ok: nf * nf * delta <= c3,
        n_within_scale: nf.powi(5) <= x,
        applicable,
    }
}
