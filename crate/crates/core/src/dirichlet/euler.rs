use super::local::LocalFactor;
use crate::arith::roots::ilog;
use crate::arith::{primes_up_to, CoeffSeries};
use crate::{Error, Result, Settings};

/// Coefficients `f(1..=limit)` of the Euler product `prod_p local_p(p^-s)`.
///
/// Primes are taken in ascending order and each one is multiplied into the
/// table in place: walking `m` downwards from `limit / p`, every entry built
/// from smaller primes spawns `f(m p^e) = f(m) c_p(e)`.
pub fn expand_euler_product(local: &LocalFactor, limit: usize, settings: &Settings) -> Result<CoeffSeries> {
    if limit == 0 {
        return Err(Error::arg("series limit must be positive"));
    }
    settings.check_table("Euler product limit", limit as u64 + 1)?;
    let mut out = vec![0i64; limit + 1];
    out[1] = 1;
    for p in primes_up_to(limit as u64) {
        let top = ilog(limit as u64, p);
        let c = local.coefficients(p, top);
        if c[0] != 1 {
            return Err(Error::Argument(format!(
                "local factor {} has constant term {} at p = {p}",
                local.label(),
                c[0]
            )));
        }
        let p = p as usize;
        for m in (1..=limit / p).rev() {
            let base = out[m];
            if base == 0 {
                continue;
            }
            let mut idx = m * p;
            for &ce in &c[1..] {
                if idx > limit {
                    break;
                }
                out[idx] = base.checked_mul(ce).ok_or(Error::Overflow("Euler product expansion"))?;
                match idx.checked_mul(p) {
                    Some(v) => idx = v,
                    None => break,
                }
            }
        }
    }
    Ok(CoeffSeries::from_raw(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{a_r_series, multiplicative_series};
    use crate::dirichlet::{local_factor_for, Family};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn squarefree(n: usize) -> bool {
        (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d * d))
    }

    #[test]
    fn one_plus_u_gives_squarefree_indicator() {
        let f = LocalFactor::from_series("1+u", vec![1, 1]);
        let s = expand_euler_product(&f, 100, &Settings::default()).unwrap();
        for n in 1..=100 {
            assert_eq!(s.get(n), i64::from(squarefree(n)), "n = {n}");
        }
    }

    #[test]
    fn zeta_multiple_gives_power_indicator() {
        for q in [2u32, 3, 5, 7] {
            let s = expand_euler_product(&LocalFactor::zeta_multiple(q), 10_000, &Settings::default()).unwrap();
            assert_eq!(s, a_r_series(q, 10_000).unwrap());
        }
    }

    #[test]
    fn g7_at_four() {
        let local = local_factor_for(7, Family::P)
            .unwrap()
            .times(&LocalFactor::zeta_multiple(7));
        let g = expand_euler_product(&local, 1000, &Settings::default()).unwrap();
        assert_eq!(g.get(4), -2);
        assert_eq!(g.get(8), 2);
        assert_eq!(g.get(2), 0);
        // P_7 has no u^7 term, so only zeta(7s) contributes at 2^7
        assert_eq!(g.get(128), 1);
    }

    #[test]
    fn matches_multiplicative_sieve_and_is_multiplicative() {
        let s = Settings::default();
        for (q, fam) in [
            (7, Family::P),
            (13, Family::R),
            (19, Family::L),
            (43, Family::ScriptL),
            (29, Family::K),
        ] {
            let local = local_factor_for(q, fam).unwrap();
            let a = expand_euler_product(&local, 20_000, &s).unwrap();
            let b = multiplicative_series(&local, 20_000, &s).unwrap();
            assert_eq!(a, b, "q = {q}");
            let mut rng = ChaCha8Rng::seed_from_u64(q);
            for _ in 0..500 {
                let m = rng.gen_range(1..=140usize);
                let n = rng.gen_range(1..=140usize);
                if num::integer::gcd(m, n) == 1 {
                    assert_eq!(a.get(m * n), a.get(m) * a.get(n));
                }
            }
        }
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        let f = LocalFactor::from_series("2+u", vec![2, 1]);
        assert!(matches!(
            expand_euler_product(&f, 10, &Settings::default()),
            Err(Error::Argument(_))
        ));
    }
}
