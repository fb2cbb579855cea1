//! Main terms of the mean value of `lambda_q * 1`, with certified constants.

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

use super::certified::Certified;
use super::classify::{classify, Branch, CaseClass};
use super::products::{p_q_constants, r_q_at_half};
use super::zeta::{zeta_prime_real, zeta_real};
use crate::{Error, Result, Settings};

/// Euler's constant to 30 digits (OEIS A001620).
pub const EULER_GAMMA_DIGITS: &str = "0.577215664901532860606512090082";
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Best known exponent in the Dirichlet divisor problem, carried exactly.
pub const THETA: Ratio<i64> = Ratio::new_raw(131, 416);
/// The exponent cannot go below this.
pub const THETA_LOWER: Ratio<i64> = Ratio::new_raw(1, 4);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstantsConfig {
    /// Required absolute accuracy of every reported constant.
    pub tolerance: f64,
    /// Prime cutoff for `P_q(1)`.
    pub p_cutoff: u64,
    /// Prime cutoff for `R_q(1/2)`.
    pub r_cutoff: u64,
}

impl Default for ConstantsConfig {
    fn default() -> Self {
        ConstantsConfig {
            tolerance: 1e-4,
            p_cutoff: 1_000_000,
            r_cutoff: 100_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MainTermKind {
    /// `x (A log x + B)`.
    XLogX,
    /// `A x^{1/2}`.
    SquareRoot,
    /// No main term is known; only upper bounds.
    UpperBoundOnly,
    /// `x^{1/3}`, the exact mean value being `floor(x^{1/3})`.
    CubeRootIdentity,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MainTerm {
    pub value: f64,
    pub error: f64,
    pub kind: MainTermKind,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MainTermParams {
    pub class: CaseClass,
    pub config: ConstantsConfig,
    pub zeta_q: Option<Certified>,
    pub zeta_prime_q: Option<Certified>,
    pub p1: Option<Certified>,
    pub logderiv_p1: Option<Certified>,
    pub r_half: Option<Certified>,
    pub zeta_q_half: Option<Certified>,
    /// `zeta(q) P_q(1)` or `zeta(q/2) R_q(1/2)`.
    pub leading: Option<Certified>,
    /// `-1 + q zeta'/zeta(q) + P_q'/P_q(1)`.
    pub bracket: Option<Certified>,
}

impl MainTermParams {
    pub fn compute(q: u64, config: &ConstantsConfig, settings: &Settings) -> Result<Self> {
        let class = classify(q)?;
        let tol = config.tolerance;
        let ztol = tol.min(1e-12);
        let mut out = MainTermParams {
            class,
            config: config.clone(),
            zeta_q: None,
            zeta_prime_q: None,
            p1: None,
            logderiv_p1: None,
            r_half: None,
            zeta_q_half: None,
            leading: None,
            bracket: None,
        };
        match class.branch {
            Branch::PlusMinusOneMod8(_) => {
                let z = zeta_real(q as f64, ztol)?;
                let dz = zeta_prime_real(q as f64, ztol)?;
                let p = p_q_constants(q, config.p_cutoff, tol, settings)?;
                let dp = p.log_derivative.expect("P_q carries its log-derivative");
                let leading = z * p.value;
                let bracket = Certified::exact(-1.0) + (dz / z).scale(q as f64) + dp;
                out.zeta_q = Some(z);
                out.zeta_prime_q = Some(dz);
                out.p1 = Some(p.value);
                out.logderiv_p1 = Some(dp);
                out.leading = Some(leading);
                out.bracket = Some(bracket);
            }
            Branch::PlusMinusElevenMod24 => {
                let z = zeta_real(q as f64 / 2.0, ztol)?;
                let r = r_q_at_half(q, config.r_cutoff, tol, settings)?;
                out.zeta_q_half = Some(z);
                out.r_half = Some(r.value);
                out.leading = Some(z * r.value);
            }
            Branch::Cubic | Branch::PlusMinusFiveMod24(_) => {}
        }
        let worst = out
            .leading
            .map_or(0.0, |c| c.error)
            .max(out.bracket.map_or(0.0, |c| c.error));
        if worst > tol {
            return Err(Error::Precision {
                requested: tol,
                achievable: worst,
            });
        }
        Ok(out)
    }

    pub fn kind(&self) -> MainTermKind {
        match self.class.branch {
            Branch::PlusMinusOneMod8(_) => MainTermKind::XLogX,
            Branch::PlusMinusElevenMod24 => MainTermKind::SquareRoot,
            Branch::PlusMinusFiveMod24(_) => MainTermKind::UpperBoundOnly,
            Branch::Cubic => MainTermKind::CubeRootIdentity,
        }
    }

    /// Exponent used to normalize residuals when none is given: a little above
    /// the proven error exponent, or `1/2` when there is no main term.
    pub fn default_alpha(&self) -> f64 {
        match self.class.branch {
            Branch::PlusMinusOneMod8(_) => {
                let c = self.class.c_q.expect("c_q is set on this branch") as f64;
                (1.0 / c).max(*THETA.numer() as f64 / *THETA.denom() as f64) + 0.05
            }
            Branch::PlusMinusElevenMod24 => 1.0 / 3.0 + 0.05,
            Branch::PlusMinusFiveMod24(_) | Branch::Cubic => 0.5,
        }
    }

    /// The main term at `x >= e^4`.
    pub fn main_term(&self, x: f64) -> Result<MainTerm> {
        if x.is_nan() || x < 4f64.exp() {
            return Err(Error::Domain(format!("main term needs x >= e^4, got {x}")));
        }
        let eps = f64::EPSILON;
        let kind = self.kind();
        let (value, error) = match kind {
            MainTermKind::XLogX => {
                let a = self.leading.expect("set on this branch");
                let b = self.bracket.expect("set on this branch");
                let inner = Certified::new(x.ln() + 2.0 * EULER_GAMMA, 4.0 * eps * x.ln()) + b;
                let t = (a * inner).scale(x);
                (t.value, t.error)
            }
            MainTermKind::SquareRoot => {
                let a = self.leading.expect("set on this branch");
                let sx = x.sqrt();
                let t = a * Certified::new(sx, eps * sx);
                (t.value, t.error)
            }
            MainTermKind::UpperBoundOnly => (0.0, 0.0),
            MainTermKind::CubeRootIdentity => {
                let v = x.cbrt();
                (v, 2.0 * eps * v)
            }
        };
        Ok(MainTerm { value, error, kind })
    }
}

/// Convenience wrapper: compute the constants for `q` and evaluate at `x`.
pub fn main_term(q: u64, x: f64, config: &ConstantsConfig, settings: &Settings) -> Result<MainTerm> {
    MainTermParams::compute(q, config, settings)?.main_term(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> ConstantsConfig {
        ConstantsConfig {
            tolerance: 2e-3,
            p_cutoff: 100_000,
            r_cutoff: 1_000_000,
        }
    }

    #[test]
    fn gamma_literal_matches_the_float() {
        assert_eq!(EULER_GAMMA_DIGITS.parse::<f64>().unwrap(), EULER_GAMMA);
        assert!(THETA_LOWER < THETA);
    }

    #[test]
    fn q7_main_term_shape() {
        let p = MainTermParams::compute(7, &quick(), &Settings::default()).unwrap();
        assert_eq!(p.kind(), MainTermKind::XLogX);
        let x = 4f64.exp();
        let m = p.main_term(x).unwrap();
        let a = p.leading.unwrap().value;
        let b = p.bracket.unwrap().value;
        assert!((m.value - a * x * (4.0 + 2.0 * EULER_GAMMA + b)).abs() < 1e-9);
        assert!(m.error > 0.0);
        assert!((p.default_alpha() - 0.55).abs() < 1e-12);
    }

    #[test]
    fn square_root_branch_scales_with_sqrt_x() {
        let p = MainTermParams::compute(13, &quick(), &Settings::default()).unwrap();
        let r1 = p.main_term(100.0).unwrap().value / 10.0;
        let r2 = p.main_term(1e6).unwrap().value / 1e3;
        assert!((r1 - r2).abs() < 1e-12);
        assert!(p.p1.is_none() && p.r_half.is_some());
    }

    #[test]
    fn five_mod_24_has_no_main_term() {
        let p = MainTermParams::compute(5, &quick(), &Settings::default()).unwrap();
        let m = p.main_term(1e4).unwrap();
        assert_eq!(m.kind, MainTermKind::UpperBoundOnly);
        assert_eq!(m.value, 0.0);
        assert!(p.leading.is_none());
    }

    #[test]
    fn small_x_is_a_domain_error() {
        let p = MainTermParams::compute(7, &quick(), &Settings::default()).unwrap();
        assert!(matches!(p.main_term(50.0), Err(Error::Domain(_))));
        assert!(matches!(p.main_term(f64::NAN), Err(Error::Domain(_))));
    }
}
