//! One streaming pass over `d <= max(x)` serves every checkpoint at once.

use crate::arith::roots::{iroot, isqrt};
use crate::arith::{map_segments, mobius_sieve, LambdaQ, LegendreChar, Liouville, Mobius, Multiplicative};
use crate::{Error, Result, Settings};

fn check_points(xs: &[u64], settings: &Settings) -> Result<u64> {
    if xs.is_empty() {
        return Err(Error::arg("no checkpoints given"));
    }
    if xs[0] == 0 || xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::arg("checkpoints must be positive and strictly increasing"));
    }
    let max = *xs.last().unwrap();
    if max > settings.summatory_limit {
        return Err(Error::Resource {
            what: "summatory x",
            requested: max,
            budget: settings.summatory_limit,
        });
    }
    Ok(max)
}

fn add_columns(parts: Vec<Vec<i64>>, n: usize, what: &'static str) -> Result<Vec<i64>> {
    let mut out = vec![0i64; n];
    for part in parts {
        for (o, v) in out.iter_mut().zip(part) {
            *o = o.checked_add(v).ok_or(Error::Overflow(what))?;
        }
    }
    Ok(out)
}

/// `sum_{d <= x} f(d) floor(x / d)`, i.e. the summatory function of `f * 1`,
/// for each checkpoint `x` in `xs` (strictly increasing).
pub fn floor_weighted_sums<F: Multiplicative + ?Sized>(f: &F, xs: &[u64], settings: &Settings) -> Result<Vec<i64>> {
    let max = check_points(xs, settings)?;
    let parts = map_segments(f, 1, max, settings, "summatory", |lo, vals| {
        let hi = lo + vals.len() as u64 - 1;
        let mut sums = vec![0i64; xs.len()];
        for (j, &x) in xs.iter().enumerate() {
            if x < lo {
                continue;
            }
            let top = x.min(hi);
            let mut acc = 0i64;
            for d in lo..=top {
                let v = vals[(d - lo) as usize];
                if v != 0 {
                    acc += v * (x / d) as i64;
                }
            }
            sums[j] = acc;
        }
        Ok(sums)
    })?;
    add_columns(parts, xs.len(), "floor-weighted sum")
}

/// `sum_{n <= x} f(n)` for each checkpoint.
pub fn prefix_sums_at<F: Multiplicative + ?Sized>(f: &F, xs: &[u64], settings: &Settings) -> Result<Vec<i64>> {
    let max = check_points(xs, settings)?;
    let parts = map_segments(f, 1, max, settings, "prefix-sum", |lo, vals| {
        let hi = lo + vals.len() as u64 - 1;
        Ok(xs
            .iter()
            .map(|&x| {
                if x < lo {
                    0
                } else {
                    vals[..=(x.min(hi) - lo) as usize].iter().sum()
                }
            })
            .collect())
    })?;
    add_columns(parts, xs.len(), "prefix sum")
}

/// `S(x) = sum_{n <= x} (lambda_q * 1)(n)`, exactly.
pub fn summatory_lambda_conv_one(q: u64, x: u64, settings: &Settings) -> Result<i64> {
    Ok(summatory_lambda_conv_one_many(q, &[x], settings)?[0])
}

pub fn summatory_lambda_conv_one_many(q: u64, xs: &[u64], settings: &Settings) -> Result<Vec<i64>> {
    let f = LambdaQ::new(LegendreChar::new(q)?);
    floor_weighted_sums(&f, xs, settings)
}

/// Mertens' function `M(x)`.
pub fn mertens(x: u64, settings: &Settings) -> Result<i64> {
    Ok(prefix_sums_at(&Mobius, &[x], settings)?[0])
}

/// `L(x) = sum_{n <= x} (-1)^Omega(n)`.
pub fn liouville_summatory(x: u64, settings: &Settings) -> Result<i64> {
    Ok(prefix_sums_at(&Liouville, &[x], settings)?[0])
}

/// `sum_{d <= sqrt x} mu(d) floor((x / d^2)^{1/r})`, the summatory function of
/// the perfect `r`-th power indicator convolved with the inverse of the square
/// indicator. For `r = 5` this equals `S(x)` for `q = 5`.
pub fn mu_floor_identity(x: u64, r: u32, settings: &Settings) -> Result<i64> {
    if r < 2 {
        return Err(Error::arg(format!("root order must be at least 2, got {r}")));
    }
    if x == 0 {
        return Ok(0);
    }
    let s = isqrt(x);
    let mu = mobius_sieve(s as usize, settings)?;
    Ok((1..=s).map(|d| mu.get(d as usize) * iroot(x / (d * d), r) as i64).sum())
}
