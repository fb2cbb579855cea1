use crate::arith::CoeffSeries;
use crate::exec::{blocks, map_ordered};
use crate::{Error, Result, Settings};

const MIN_CHUNK: usize = 1 << 15;

/// `(a * b)(n) = sum_{d | n} a(d) b(n / d)` for `n <= N`.
///
/// Output is produced in independent chunks of `n`; each chunk walks every
/// `d` up to its right end, so the extra cost is one pass over `d` per chunk.
pub fn dirichlet_convolve(a: &CoeffSeries, b: &CoeffSeries, settings: &Settings) -> Result<CoeffSeries> {
    let n = a.limit();
    if b.limit() != n {
        return Err(Error::arg(format!(
            "convolution of series with limits {} and {}",
            n,
            b.limit()
        )));
    }
    let (ra, rb) = (a.raw(), b.raw());
    let chunk = (n / 16).max(MIN_CHUNK);
    let parts = map_ordered(settings, "convolve", blocks(1, n as u64, chunk), |(lo, hi)| {
        let (lo, hi) = (lo as usize, hi as usize);
        let mut out = vec![0i64; hi - lo + 1];
        for d in 1..=hi {
            let ad = ra[d];
            if ad == 0 {
                continue;
            }
            for k in lo.div_ceil(d)..=hi / d {
                let bk = rb[k];
                if bk == 0 {
                    continue;
                }
                let slot = &mut out[d * k - lo];
                *slot = ad
                    .checked_mul(bk)
                    .and_then(|t| slot.checked_add(t))
                    .ok_or(Error::Overflow("Dirichlet convolution"))?;
            }
        }
        Ok(out)
    })?;
    let mut values = Vec::with_capacity(n + 1);
    values.push(0);
    for p in parts {
        values.extend(p);
    }
    Ok(CoeffSeries::from_raw(values))
}

/// Left-to-right convolution of several series sharing one limit.
pub fn convolve_many(series: &[&CoeffSeries], settings: &Settings) -> Result<CoeffSeries> {
    let (first, rest) = series.split_first().ok_or_else(|| Error::arg("nothing to convolve"))?;
    rest.iter()
        .try_fold((*first).clone(), |acc, s| dirichlet_convolve(&acc, s, settings))
}

/// Dirichlet inverse, for series with `a(1) = +-1`.
pub fn dirichlet_inverse(a: &CoeffSeries) -> Result<CoeffSeries> {
    let n = a.limit();
    let ra = a.raw();
    let lead = ra[1];
    if lead != 1 && lead != -1 {
        return Err(Error::NotInvertible(lead));
    }
    // inv(m) = -lead * sum_{d | m, d > 1} a(d) inv(m / d); contributions are
    // pushed forward from each finished inv(m).
    let mut acc = vec![0i64; n + 1];
    let mut inv = vec![0i64; n + 1];
    inv[1] = lead;
    for m in 1..=n {
        if m > 1 {
            inv[m] = acc[m].checked_neg().ok_or(Error::Overflow("Dirichlet inverse"))? * lead;
        }
        let im = inv[m];
        if im == 0 {
            continue;
        }
        for d in 2..=n / m {
            let ad = ra[d];
            if ad == 0 {
                continue;
            }
            let slot = &mut acc[d * m];
            *slot = ad
                .checked_mul(im)
                .and_then(|t| slot.checked_add(t))
                .ok_or(Error::Overflow("Dirichlet inverse"))?;
        }
    }
    Ok(CoeffSeries::from_raw(inv))
}
