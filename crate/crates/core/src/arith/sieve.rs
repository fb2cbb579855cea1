use super::functions::Multiplicative;
use super::roots::isqrt;
use super::series::CoeffSeries;
use crate::exec::{blocks, map_ordered};
use crate::{Error, Result, Settings};

/// Primes `<= n` by a plain sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Smallest-prime-factor table on `[2, limit]`.
#[derive(Clone, Debug)]
pub struct FactorSieve {
    spf: Vec<u32>,
}

pub fn build_factor_sieve(limit: u64, settings: &Settings) -> Result<FactorSieve> {
    if limit < 2 {
        return Err(Error::arg(format!("factor sieve limit must be >= 2, got {limit}")));
    }
    settings.check_table("factor sieve limit", limit + 1)?;
    if limit > u32::MAX as u64 {
        return Err(Error::Resource {
            what: "factor sieve limit",
            requested: limit,
            budget: u32::MAX as u64,
        });
    }
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] != 0 {
            continue;
        }
        spf[i] = i as u32;
        let mut j = i.saturating_mul(i);
        while j <= n {
            if spf[j] == 0 {
                spf[j] = i as u32;
            }
            j += i;
        }
    }
    Ok(FactorSieve { spf })
}

impl FactorSieve {
    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    pub fn smallest_prime_factor(&self, n: u64) -> u64 {
        assert!(n >= 2 && n <= self.limit(), "{n} outside [2, {}]", self.limit());
        self.spf[n as usize] as u64
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.smallest_prime_factor(n) == n
    }

    /// Prime factorization as ascending `(p, e)` pairs.
    pub fn factorize(&self, mut n: u64) -> Vec<(u64, u32)> {
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.smallest_prime_factor(n);
            n /= p;
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Values of a multiplicative function on `1..=limit`, one pass over the
    /// table: `f(n) = f(n / p^e) * f(p^e)` with `p = spf(n)`.
    pub fn multiplicative<F: Multiplicative + ?Sized>(&self, f: &F) -> Result<CoeffSeries> {
        let n = self.spf.len() - 1;
        let mut out = vec![0i64; n + 1];
        out[1] = 1;
        for i in 2..=n {
            let p = self.spf[i] as usize;
            let mut m = i / p;
            let mut e = 1u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out[i] = out[m]
                .checked_mul(f.at_prime_power(p as u64, e))
                .ok_or(Error::Overflow("multiplicative sieve"))?;
        }
        Ok(CoeffSeries::from_raw(out))
    }
}

/// Segment-by-segment evaluation of multiplicative functions on `[1, limit]`
/// using only the primes up to `sqrt(limit)`.
#[derive(Clone, Debug)]
pub struct SegmentedSieve {
    base: Vec<u64>,
    limit: u64,
}

impl SegmentedSieve {
    pub fn new(limit: u64) -> Self {
        SegmentedSieve {
            base: primes_up_to(isqrt(limit)),
            limit,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `f(n)` for `n` in `[lo, hi]`.
    pub fn evaluate<F: Multiplicative + ?Sized>(&self, f: &F, lo: u64, hi: u64) -> Result<Vec<i64>> {
        assert!(
            lo >= 1 && lo <= hi && hi <= self.limit,
            "segment [{lo}, {hi}] outside [1, {}]",
            self.limit
        );
        let len = (hi - lo + 1) as usize;
        let mut rest: Vec<u64> = (lo..=hi).collect();
        let mut val = vec![1i64; len];
        for &p in &self.base {
            if p * p > hi {
                break;
            }
            let first = lo.div_ceil(p) * p;
            let mut j = first;
            while j <= hi {
                let k = (j - lo) as usize;
                let mut e = 0u32;
                while rest[k].is_multiple_of(p) {
                    rest[k] /= p;
                    e += 1;
                }
                val[k] = val[k]
                    .checked_mul(f.at_prime_power(p, e))
                    .ok_or(Error::Overflow("segmented sieve"))?;
                j += p;
            }
        }
        // what remains above 1 is a single prime > sqrt(hi)
        for (r, v) in rest.iter().zip(val.iter_mut()) {
            if *r > 1 {
                *v = v
                    .checked_mul(f.at_prime_power(*r, 1))
                    .ok_or(Error::Overflow("segmented sieve"))?;
            }
        }
        Ok(val)
    }
}

/// Evaluate `f` on `[lo, hi]` segment by segment and hand each segment
/// (its first index and values) to `g`. Results come back in segment order.
pub fn map_segments<F, T, G>(f: &F, lo: u64, hi: u64, settings: &Settings, stage: &str, g: G) -> Result<Vec<T>>
where
    F: Multiplicative + ?Sized,
    T: Send,
    G: Fn(u64, &[i64]) -> Result<T> + Sync + Send,
{
    if lo == 0 || lo > hi {
        return Err(Error::arg(format!("invalid segment range [{lo}, {hi}]")));
    }
    let sieve = SegmentedSieve::new(hi);
    map_ordered(settings, stage, blocks(lo, hi, settings.segment_len), |(a, b)| {
        let values = sieve.evaluate(f, a, b)?;
        g(a, &values)
    })
}

/// Segmented sieve of Eratosthenes over `[2, limit]`; `g` sees the primes of
/// each segment in ascending order, and results come back in segment order.
pub fn for_each_prime_block<T, G>(limit: u64, settings: &Settings, stage: &str, g: G) -> Result<Vec<T>>
where
    T: Send,
    G: Fn(&[u64]) -> Result<T> + Sync + Send,
{
    if limit < 2 {
        return Ok(Vec::new());
    }
    let base = primes_up_to(isqrt(limit));
    map_ordered(settings, stage, blocks(2, limit, settings.segment_len), |(lo, hi)| {
        let mut composite = vec![false; (hi - lo + 1) as usize];
        for &p in &base {
            if p * p > hi {
                break;
            }
            let mut j = lo.div_ceil(p).max(p) * p;
            while j <= hi {
                composite[(j - lo) as usize] = true;
                j += p;
            }
        }
        let primes: Vec<u64> = composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| lo + i as u64)
            .collect();
        g(&primes)
    })
}
