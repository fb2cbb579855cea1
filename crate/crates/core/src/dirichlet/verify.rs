use serde::{Deserialize, Serialize};

use super::convolution::{convolve_many, dirichlet_convolve, dirichlet_inverse};
use super::euler::expand_euler_product;
use super::local::{local_factor_for, Family, LocalFactor};
use crate::arith::roots::{iroot, isqrt};
use crate::arith::{a_r_series, lambda_q_sieve, liouville_sieve, mobius_sieve, tau_sieve, CoeffSeries, LegendreChar};
use crate::exec::map_ordered;
use crate::{Error, Result, Settings};

/// One coefficient-level identity `lambda_q * 1 = rhs`, checked on `1..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    /// Smallest `n` where the two sides differ.
    pub first_mismatch: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationReport {
    pub q: u64,
    pub limit: usize,
    pub checks: Vec<IdentityCheck>,
}

impl FactorizationReport {
    pub fn success(&self) -> bool {
        self.checks.iter().all(|c| c.first_mismatch.is_none())
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.checks.iter().filter_map(|c| c.first_mismatch).min()
    }
}

/// Compare `lambda_q * 1`, computed from the `lambda_q` sieve, with the
/// convolution forms predicted by the Euler-product factorizations:
///
/// * `q = +-1 mod 8`: `g_q * tau`, where `g_q` are the coefficients of `zeta(qs) P_q(s)`;
/// * `q = +-3 mod 8`: `(zeta(qs) R(s)) * a_2`, named `h_q * a_2` for `q = +-11 mod 24`;
/// * `q = 3`: additionally `a_3`, and `lambda_3 = a_3 * mu` itself;
/// * `q = +-5 mod 24`: `k_q * a_2^-1` and the final form of its subcase:
///   `a_5 * a_2^-1` (q = 5), `l_q * a_4 * a_2^-1` or `nu_q * a_4^-1 * a_2^-1`.
///
/// A mismatch is a finding, reported through the returned checks.
pub fn verify_factorization(q: u64, limit: usize, settings: &Settings) -> Result<FactorizationReport> {
    let chi = LegendreChar::new(q)?;
    if limit < 2 {
        return Err(Error::arg("factorization check needs a limit of at least 2"));
    }
    let s = settings;
    let qz = u32::try_from(q).map_err(|_| Error::arg(format!("q = {q} too large")))?;
    let lambda = lambda_q_sieve(chi, limit, s)?;
    let lhs = dirichlet_convolve(&lambda, &CoeffSeries::one(limit), s)?;
    let zeta_q = LocalFactor::zeta_multiple(qz);
    let coefficients = |family: Family| -> Result<CoeffSeries> {
        expand_euler_product(&local_factor_for(q, family)?.times(&zeta_q), limit, s)
    };
    let a = |r: u32| a_r_series(r, limit);

    let mut checks = Vec::new();
    let mut check_against = |identity: &str, target: &CoeffSeries, rhs: CoeffSeries| {
        checks.push(IdentityCheck {
            identity: identity.to_string(),
            first_mismatch: target.first_mismatch(&rhs),
        })
    };

    if Family::P.admits(q) {
        let g = coefficients(Family::P)?;
        check_against(
            "lambda_q*1 = g_q*tau",
            &lhs,
            dirichlet_convolve(&g, &tau_sieve(limit, s)?, s)?,
        );
        return Ok(FactorizationReport { q, limit, checks });
    }

    let a2 = a(2)?;
    let r = coefficients(Family::R)?;
    let name = if matches!(q % 24, 11 | 13) {
        "lambda_q*1 = h_q*a_2"
    } else {
        "lambda_q*1 = r_q*a_2"
    };
    check_against(name, &lhs, dirichlet_convolve(&r, &a2, s)?);

    if q == 3 {
        // L(s, lambda_3) = zeta(3s)/zeta(s), so lambda_3 itself is a_3*mu.
        check_against("lambda_3*1 = a_3", &lhs, a(3)?);
        let a3_mu = dirichlet_convolve(&a(3)?, &mobius_sieve(limit, s)?, s)?;
        check_against("lambda_3 = a_3*mu", &lambda, a3_mu);
    }
    if Family::K.admits(q) {
        let a2_inv = dirichlet_inverse(&a2)?;
        let k = coefficients(Family::K)?;
        check_against("lambda_q*1 = k_q*a_2^-1", &lhs, dirichlet_convolve(&k, &a2_inv, s)?);
        if q == 5 {
            check_against("lambda_5*1 = a_5*a_2^-1", &lhs, dirichlet_convolve(&a(5)?, &a2_inv, s)?);
        } else if Family::L.admits(q) {
            let l = coefficients(Family::L)?;
            check_against(
                "lambda_q*1 = l_q*a_4*a_2^-1",
                &lhs,
                convolve_many(&[&l, &a(4)?, &a2_inv], s)?,
            );
        } else {
            let nu = coefficients(Family::ScriptL)?;
            let a4_inv = dirichlet_inverse(&a(4)?)?;
            check_against(
                "lambda_q*1 = nu_q*a_4^-1*a_2^-1",
                &lhs,
                convolve_many(&[&nu, &a4_inv, &a2_inv], s)?,
            );
        }
    }
    Ok(FactorizationReport { q, limit, checks })
}

/// [`verify_factorization`] for several `q`, run in parallel across `q`.
/// The three floor identities on summatory functions, for every `x <= limit`:
/// `sum (lambda * 1) = floor(x^{1/2})`, `sum (lambda_3 * 1) = floor(x^{1/3})`
/// and `sum (lambda_5 * 1) = sum_{d <= sqrt x} mu(d) floor((x/d^2)^{1/5})`.
/// A mismatch index is the first failing `x`.
pub fn verify_floor_identities(limit: usize, settings: &Settings) -> Result<Vec<IdentityCheck>> {
    if limit < 1 {
        return Err(Error::arg("identity suite needs a positive limit"));
    }
    let s = settings;
    let one = CoeffSeries::one(limit);
    let sums = |f: CoeffSeries| -> Result<Vec<i64>> { dirichlet_convolve(&f, &one, s)?.prefix_sums() };
    let liouville = sums(liouville_sieve(limit, s)?)?;
    let l3 = sums(lambda_q_sieve(LegendreChar::new(3)?, limit, s)?)?;
    let l5 = sums(lambda_q_sieve(LegendreChar::new(5)?, limit, s)?)?;
    let mu = mobius_sieve(isqrt(limit as u64) as usize, s)?;
    let first = |got: &[i64], want: &dyn Fn(u64) -> i64| {
        got.iter()
            .zip(1u64..)
            .find(|(v, x)| **v != want(*x))
            .map(|(_, x)| x as usize)
    };
    let mu_floor = |x: u64| -> i64 {
        (1..=isqrt(x))
            .map(|d| mu.get(d as usize) * iroot(x / (d * d), 5) as i64)
            .sum()
    };
    Ok(vec![
        IdentityCheck {
            identity: "sum lambda*1 = floor(x^(1/2))".into(),
            first_mismatch: first(&liouville, &|x| isqrt(x) as i64),
        },
        IdentityCheck {
            identity: "sum lambda_3*1 = floor(x^(1/3))".into(),
            first_mismatch: first(&l3, &|x| iroot(x, 3) as i64),
        },
        IdentityCheck {
            identity: "sum lambda_5*1 = sum mu(d) floor((x/d^2)^(1/5))".into(),
            first_mismatch: first(&l5, &mu_floor),
        },
    ])
}

pub fn verify_many(qs: &[u64], limit: usize, settings: &Settings) -> Result<Vec<FactorizationReport>> {
    map_ordered(settings, "verify", qs.to_vec(), |q| {
        verify_factorization(q, limit, settings)
    })
}
