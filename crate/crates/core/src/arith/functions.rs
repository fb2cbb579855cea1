use super::legendre::LegendreChar;
use super::roots::iroot;
use super::series::CoeffSeries;
use super::sieve::{build_factor_sieve, map_segments};
use crate::{Error, Result, Settings};

/// A multiplicative arithmetic function, given by its values on prime powers.
pub trait Multiplicative: Sync {
    /// `f(p^e)` for a prime `p` and `e >= 1`.
    fn at_prime_power(&self, p: u64, e: u32) -> i64;
}

impl<F: Fn(u64, u32) -> i64 + Sync> Multiplicative for F {
    fn at_prime_power(&self, p: u64, e: u32) -> i64 {
        self(p, e)
    }
}

/// Number of divisors.
#[derive(Clone, Copy, Debug)]
pub struct Tau;

impl Multiplicative for Tau {
    fn at_prime_power(&self, _p: u64, e: u32) -> i64 {
        e as i64 + 1
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Mobius;

impl Multiplicative for Mobius {
    fn at_prime_power(&self, _p: u64, e: u32) -> i64 {
        if e == 1 {
            -1
        } else {
            0
        }
    }
}

/// `(-1)^Omega(n)`.
#[derive(Clone, Copy, Debug)]
pub struct Liouville;

impl Multiplicative for Liouville {
    fn at_prime_power(&self, _p: u64, e: u32) -> i64 {
        if e.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// `lambda_q(n) = (tau(n) / q)`. Since `tau(p^e) = e + 1`, the value on a
/// prime power depends only on `e + 1 mod q`.
#[derive(Clone, Debug)]
pub struct LambdaQ {
    chi: LegendreChar,
    table: Vec<i8>,
}

impl LambdaQ {
    pub fn new(chi: LegendreChar) -> Self {
        LambdaQ {
            table: chi.table(),
            chi,
        }
    }

    pub fn character(&self) -> LegendreChar {
        self.chi
    }
}

impl Multiplicative for LambdaQ {
    fn at_prime_power(&self, _p: u64, e: u32) -> i64 {
        self.table[((e as u64 + 1) % self.chi.modulus()) as usize] as i64
    }
}

/// Values of `f` on `1..=limit`. Up to `settings.segment_threshold` entries the
/// smallest-prime-factor table is used; above it the range is sieved in
/// segments.
pub fn multiplicative_series<F: Multiplicative + ?Sized>(
    f: &F,
    limit: usize,
    settings: &Settings,
) -> Result<CoeffSeries> {
    if limit == 0 {
        return Err(Error::arg("series limit must be positive"));
    }
    settings.check_table("coefficient series limit", limit as u64 + 1)?;
    if limit < 2 {
        return Ok(CoeffSeries::one(1));
    }
    if limit <= settings.segment_threshold {
        return build_factor_sieve(limit as u64, settings)?.multiplicative(f);
    }
    let parts = map_segments(f, 1, limit as u64, settings, "sieve", |_, v| Ok(v.to_vec()))?;
    let mut values = Vec::with_capacity(limit + 1);
    values.push(0);
    for part in parts {
        values.extend(part);
    }
    Ok(CoeffSeries::from_raw(values))
}

pub fn tau_sieve(limit: usize, settings: &Settings) -> Result<CoeffSeries> {
    multiplicative_series(&Tau, limit, settings)
}

pub fn mobius_sieve(limit: usize, settings: &Settings) -> Result<CoeffSeries> {
    multiplicative_series(&Mobius, limit, settings)
}

pub fn liouville_sieve(limit: usize, settings: &Settings) -> Result<CoeffSeries> {
    multiplicative_series(&Liouville, limit, settings)
}

pub fn lambda_q_sieve(chi: LegendreChar, limit: usize, settings: &Settings) -> Result<CoeffSeries> {
    multiplicative_series(&LambdaQ::new(chi), limit, settings)
}

/// Indicator of perfect `r`-th powers on `1..=limit`.
pub fn a_r_series(r: u32, limit: usize) -> Result<CoeffSeries> {
    if r < 2 {
        return Err(Error::arg(format!("a_r needs r >= 2, got {r}")));
    }
    if limit == 0 {
        return Err(Error::arg("series limit must be positive"));
    }
    let mut values = vec![0i64; limit + 1];
    for m in 1..=iroot(limit as u64, r) {
        values[m.pow(r) as usize] = 1;
    }
    Ok(CoeffSeries::from_raw(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn divisors(n: usize) -> Vec<usize> {
        (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
    }

    #[test]
    fn tau_values() {
        let t = tau_sieve(100, &Settings::default()).unwrap();
        assert_eq!(t.get(1), 1);
        assert_eq!(t.get(12), divisors(12).len() as i64);
        assert_eq!(t.get(12), 6);
        for p in [2, 3, 5, 7, 97] {
            assert_eq!(t.get(p), 2);
        }
    }

    #[test]
    fn mobius_and_liouville_values() {
        let s = Settings::default();
        let mu = mobius_sieve(100, &s).unwrap();
        assert_eq!((mu.get(1), mu.get(4), mu.get(6)), (1, 0, 1));
        let lam = liouville_sieve(100, &s).unwrap();
        assert_eq!((lam.get(1), lam.get(8)), (1, -1));
        // lambda = mu on squarefree n
        for n in 1..=100 {
            if mu.get(n) != 0 {
                assert_eq!(mu.get(n), lam.get(n));
            }
            assert!(lam.get(n).abs() == 1);
        }
    }

    #[test]
    fn mobius_sums_over_divisors_to_indicator() {
        let mu = mobius_sieve(10_000, &Settings::default()).unwrap();
        for n in 1..=10_000usize {
            let s: i64 = divisors(n).into_iter().map(|d| mu.get(d)).sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn lambda_q_values() {
        let s = Settings::default();
        let l3 = lambda_q_sieve(LegendreChar::new(3).unwrap(), 1000, &s).unwrap();
        assert_eq!(l3.get(1), 1);
        for p in [2, 3, 5, 7, 31] {
            assert_eq!(l3.get(p * p), 0);
        }
        let l7 = lambda_q_sieve(LegendreChar::new(7).unwrap(), 1000, &s).unwrap();
        assert_eq!(l7.get(12), -1);
        assert!(l7.values().iter().all(|v| (-1..=1).contains(v)));
    }

    #[test]
    fn perfect_power_indicators() {
        let a2 = a_r_series(2, 100).unwrap();
        let ones: Vec<usize> = (1..=100).filter(|&n| a2.get(n) == 1).collect();
        assert_eq!(ones, vec![1, 4, 9, 16, 25, 36, 49, 64, 81, 100]);
        let a5 = a_r_series(5, 100).unwrap();
        assert_eq!((a5.get(32), a5.get(33)), (1, 0));
        assert!(a_r_series(1, 10).is_err());
        for r in 2..=5u32 {
            let a = a_r_series(r, 100_000).unwrap();
            let sums = a.prefix_sums().unwrap();
            for x in 1..=100_000u64 {
                let direct = (1..).take_while(|m: &u64| m.pow(r) <= x).count() as i64;
                assert_eq!(sums[x as usize - 1], direct);
            }
        }
    }

    #[test]
    fn multiplicative_on_random_coprime_pairs() {
        let n = 100_000usize;
        let s = Settings::default();
        let series = [
            tau_sieve(n, &s).unwrap(),
            mobius_sieve(n, &s).unwrap(),
            liouville_sieve(n, &s).unwrap(),
            lambda_q_sieve(LegendreChar::new(5).unwrap(), n, &s).unwrap(),
            lambda_q_sieve(LegendreChar::new(13).unwrap(), n, &s).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut tested = 0;
        while tested < 2000 {
            let a = rng.gen_range(1..=1000u64);
            let b = rng.gen_range(1..=(n as u64 / a));
            if gcd(a, b) != 1 {
                continue;
            }
            tested += 1;
            for f in &series {
                assert_eq!(f.get((a * b) as usize), f.get(a as usize) * f.get(b as usize));
            }
        }
    }

    #[test]
    fn segmented_route_matches_table_route() {
        let small = Settings {
            segment_threshold: 10,
            segment_len: 777,
            ..Settings::default()
        };
        let chi = LegendreChar::new(7).unwrap();
        assert_eq!(
            lambda_q_sieve(chi, 20_000, &small).unwrap(),
            lambda_q_sieve(chi, 20_000, &Settings::default()).unwrap()
        );
    }
}
