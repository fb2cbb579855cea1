//! Certified Euler products over all primes: `P_q(1)`, `P_q'/P_q(1)` and
//! `R_q(1/2)`.
//!
//! Primes up to the cutoff are summed in log space; primes beyond it are
//! bounded with `pi(t) < 1.25506 t / log t` (valid for all `t > 1`).

use serde::{Deserialize, Serialize};

use super::certified::{Certified, CompensatedSum};
use super::classify::{classify, Branch};
use crate::arith::{for_each_prime_block, LegendreChar};
use crate::{Error, Result, Settings};

const PI_UPPER: f64 = 1.25506;
const EPS: f64 = f64::EPSILON;
/// Local series are cut once a term drops below this fraction of the first.
const CUT: f64 = 1e-20;

/// Bound on `sum_{p > cutoff} p^{-a}`, `a > 1`.
pub fn prime_power_tail(cutoff: f64, a: f64) -> f64 {
    assert!(a > 1.0 && cutoff >= 2.0);
    PI_UPPER * a / ((a - 1.0) * cutoff.ln()) * cutoff.powf(1.0 - a)
}

/// Bound on `sum_{p > cutoff} log p * p^{-a}`, `a > 1`.
pub fn prime_log_power_tail(cutoff: f64, a: f64) -> f64 {
    assert!(a > 1.0 && cutoff >= 2.0);
    PI_UPPER * a / (a - 1.0) * cutoff.powf(1.0 - a)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductConstants {
    pub q: u64,
    pub cutoff: u64,
    /// The infinite product.
    pub value: Certified,
    /// `d/ds log` of the product at the evaluation point; only for `P_q`.
    pub log_derivative: Option<Certified>,
    /// Certified bound on the omitted part of the log-product.
    pub tail_bound: f64,
    /// Extremes of the local factors over `p <= cutoff`.
    pub min_local: f64,
    pub max_local: f64,
}

/// The local term is `sum_{m=start}^{q-1} b[m] p^{-m sigma}` with `|b[m]| <= 2`.
struct LocalSeries {
    start: u32,
    b: Vec<i8>,
    sigma: f64,
    derivative: bool,
}

#[derive(Clone, Copy)]
struct Partial {
    log: CompensatedSum,
    deriv: CompensatedSum,
    err_log: f64,
    err_deriv: f64,
    min: f64,
    max: f64,
}

impl Default for Partial {
    fn default() -> Self {
        Partial {
            log: CompensatedSum::default(),
            deriv: CompensatedSum::default(),
            err_log: 0.0,
            err_deriv: 0.0,
            min: f64::INFINITY,
            max: f64::NEG_INFINITY,
        }
    }
}

impl LocalSeries {
    fn block(&self, primes: &[u64]) -> Result<Partial> {
        let mut out = Partial::default();
        let last = self.b.len() as u32 - 1;
        for &p in primes {
            let pf = p as f64;
            let x = pf.powf(-self.sigma);
            let mut pow = x.powi(self.start as i32);
            let first = pow;
            let (mut t, mut t_abs, mut mt, mut mt_abs) = (0.0, 0.0, 0.0, 0.0);
            let mut steps = 0u32;
            let mut m = self.start;
            loop {
                let c = self.b[m as usize] as f64;
                t += c * pow;
                t_abs += c.abs() * pow;
                if self.derivative {
                    mt += c * m as f64 * pow;
                    mt_abs += c.abs() * m as f64 * pow;
                }
                steps += 1;
                if m == last || pow < CUT * first {
                    break;
                }
                m += 1;
                pow *= x;
            }
            // Omitted terms are at most 2 x^{m+1} / (1 - x), times m for the derivative.
            let trunc = if m == last { 0.0 } else { 2.0 * pow * x / (1.0 - x) };
            let local = 1.0 + t;
            if !(local > 0.0 && local < 2.0) {
                return Err(Error::Invariant(format!(
                    "local factor {local} at p = {p} outside (0, 2)"
                )));
            }
            out.min = out.min.min(local);
            out.max = out.max.max(local);
            let rel = (steps as f64 + self.start as f64 + 6.0) * EPS;
            let dt = rel * t_abs + trunc;
            let lg = t.ln_1p();
            out.log.add(lg);
            out.err_log += dt / (local - dt) + 2.0 * EPS * lg.abs();
            if self.derivative {
                let lp = pf.ln();
                let dmt = rel * mt_abs + trunc * (m as f64 + 1.0 + 1.0 / (1.0 - x));
                let d = -lp * mt / local;
                out.deriv.add(d);
                out.err_deriv += lp * (dmt + mt.abs() * dt / (local - dt)) / (local - dt) + 4.0 * EPS * d.abs();
            }
        }
        Ok(out)
    }

    fn run(&self, q: u64, cutoff: u64, tol: f64, settings: &Settings) -> Result<ProductConstants> {
        if cutoff < 16 {
            return Err(Error::arg(format!("prime cutoff {cutoff} is too small")));
        }
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::arg(format!("tolerance must be positive, got {tol}")));
        }
        if cutoff > settings.prime_cutoff_limit {
            return Err(Error::Resource {
                what: "prime cutoff",
                requested: cutoff,
                budget: settings.prime_cutoff_limit,
            });
        }
        let parts = for_each_prime_block(cutoff, settings, "euler-product", |ps| self.block(ps))?;
        let mut total = Partial::default();
        for p in &parts {
            total.log.merge(&p.log);
            total.deriv.merge(&p.deriv);
            total.err_log += p.err_log;
            total.err_deriv += p.err_deriv;
            total.min = total.min.min(p.min);
            total.max = total.max.max(p.max);
        }

        let pf = cutoff as f64;
        let a = self.start as f64 * self.sigma;
        let r = pf.powf(-self.sigma);
        let t_max = 2.0 * pf.powf(-a) / (1.0 - r);
        if t_max >= 0.5 {
            return Err(Error::arg(format!(
                "prime cutoff {cutoff} is too small for a tail bound"
            )));
        }
        let tail = 2.0 / ((1.0 - r) * (1.0 - t_max)) * prime_power_tail(pf, a);
        let log_sum = total.log.total();
        let log_err = total.err_log + total.log.rounding_bound(0.0) + tail;
        let value = log_sum.exp();
        let value = Certified::new(
            value,
            value * (log_err.exp_m1() * (1.0 + 4.0 * EPS)) + 4.0 * EPS * value,
        );

        let log_derivative = self.derivative.then(|| {
            let s = self.start as f64;
            let d_tail =
                2.0 * (s / (1.0 - r) + r / ((1.0 - r) * (1.0 - r))) / (1.0 - t_max) * prime_log_power_tail(pf, a);
            let err = total.err_deriv + total.deriv.rounding_bound(0.0) + d_tail;
            Certified::new(total.deriv.total(), err)
        });

        let worst = value.error.max(log_derivative.map_or(0.0, |d| d.error));
        if worst > tol {
            return Err(Error::Precision {
                requested: tol,
                achievable: worst,
            });
        }
        Ok(ProductConstants {
            q,
            cutoff,
            value,
            log_derivative,
            tail_bound: tail,
            min_local: total.min,
            max_local: total.max,
        })
    }
}

/// `P_q(1)` and `P_q'/P_q(1)` for `q = +-1 mod 8`.
pub fn p_q_constants(q: u64, cutoff: u64, tol: f64, settings: &Settings) -> Result<ProductConstants> {
    let class = classify(q)?;
    let Some(c) = class.c_q else {
        return Err(Error::Classification {
            q,
            family: "P_q (q = +-1 mod 8)".into(),
        });
    };
    let chi = LegendreChar::new(q)?;
    let b = (0..q as i64)
        .map(|m| if m < 2 { 0 } else { chi.eval(m + 1) - chi.eval(m) })
        .collect();
    LocalSeries {
        start: c,
        b,
        sigma: 1.0,
        derivative: true,
    }
    .run(q, cutoff, tol, settings)
}

/// `R_q(1/2)` for `q = +-11 mod 24`.
pub fn r_q_at_half(q: u64, cutoff: u64, tol: f64, settings: &Settings) -> Result<ProductConstants> {
    let class = classify(q)?;
    if class.branch != Branch::PlusMinusElevenMod24 {
        return Err(Error::Classification {
            q,
            family: "R_q(1/2) (q = +-11 mod 24)".into(),
        });
    }
    let chi = LegendreChar::new(q)?;
    let b = (0..q as i64)
        .map(|m| if m < 3 { 0 } else { chi.eval(m + 1) + chi.eval(m) })
        .collect();
    LocalSeries {
        start: 3,
        b,
        sigma: 0.5,
        derivative: false,
    }
    .run(q, cutoff, tol, settings)
}
