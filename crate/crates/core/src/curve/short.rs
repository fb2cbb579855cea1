use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use super::near::near_integer_sqrt_int;
use super::shapes::{bound_shapes, BoundShapes, Range};
use crate::arith::mobius_sieve;
use crate::arith::roots::{checked_pow, iroot, isqrt};
use crate::{Error, Result, Settings};

/// Default for the constant in the range `y <= c3 x^{11/20}`, which is only known to exist.
pub const DEFAULT_C3: f64 = 0.25;

/// Largest `x + y` handled; keeps `n^5 x` and `16 y^2` inside `u128`.
pub const MAX_EXACT_X: u64 = 10_000_000_000_000_000;

/// A short interval `(x, x + y]` with integer endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShortIntervalInstance {
    pub x: u64,
    pub y: u64,
    pub c3: f64,
}

fn rational(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite")
}

impl ShortIntervalInstance {
    pub fn new(x: u64, y: u64) -> Self {
        ShortIntervalInstance { x, y, c3: DEFAULT_C3 }
    }

    fn validate(&self, need_positive_y: bool) -> Result<()> {
        if self.x == 0 {
            return Err(Error::arg("x must be positive"));
        }
        if self.y > self.x || (need_positive_y && self.y == 0) {
            return Err(Error::arg(format!(
                "need 1 <= y <= x, got x = {}, y = {}",
                self.x, self.y
            )));
        }
        if self.x.checked_add(self.y).is_none_or(|s| s > MAX_EXACT_X) {
            return Err(Error::Resource {
                what: "short interval end",
                requested: self.x.saturating_add(self.y),
                budget: MAX_EXACT_X,
            });
        }
        if !(self.c3 > 0.0 && self.c3 <= 0.25) {
            return Err(Error::arg(format!("c3 must lie in (0, 1/4], got {}", self.c3)));
        }
        Ok(())
    }

    /// `y <= c3 x^{num/den}`, decided exactly as `y^den <= c3^den x^num`.
    fn below_power(&self, num: usize, den: usize) -> bool {
        let y = BigRational::from_integer(BigInt::from(self.y));
        let x = BigRational::from_integer(BigInt::from(self.x));
        num::pow(y, den) <= num::pow(rational(self.c3), den) * num::pow(x, num)
    }

    /// `y <= c3 x^{11/20}`, the hypothesis of the general short-interval bound.
    pub fn satisfies_general(&self) -> bool {
        self.below_power(11, 20)
    }

    /// `y <= c3 x^{19/36}`, under which the bound is `x^{1/12} log x`.
    pub fn satisfies_sharp(&self) -> bool {
        self.below_power(19, 36)
    }
}

/// `sum_{x < n <= x + y} (lambda_5 * 1)(n)` through the identity
/// `S(t) = sum_{d <= sqrt t} mu(d) floor((t / d^2)^{1/5})` at both ends.
pub fn short_interval_sum(inst: &ShortIntervalInstance, settings: &Settings) -> Result<i64> {
    inst.validate(false)?;
    if inst.y == 0 {
        return Ok(0);
    }
    let (x, z) = (inst.x, inst.x + inst.y);
    let mu = mobius_sieve(isqrt(z) as usize, settings)?;
    let s = |t: u64| -> i64 {
        (1..=isqrt(t))
            .map(|d| mu.get(d as usize) * iroot(t / (d * d), 5) as i64)
            .sum()
    };
    Ok(s(z) - s(x))
}

/// One window of `n` values inside a single range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowRow {
    /// First `n` of the window; also the `N` used for `delta_N`.
    pub n_start: u64,
    pub n_end: u64,
    pub range: Range,
    /// `y / sqrt(N^5 x)`.
    pub delta: f64,
    /// `16 y^2 < N^5 x`, i.e. `delta < 1/4`, checked on integers.
    pub delta_guard: bool,
    /// Pairs `(d, n)` with `n` in the window and `x < d^2 n^5 <= x + y`.
    pub pair_count: u64,
    /// `n` in the window with `||sqrt(x / n^5)|| < delta`.
    pub near_count: u64,
    pub shapes: BoundShapes,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowDecomposition {
    pub instance: ShortIntervalInstance,
    pub short_sum: i64,
    /// `sum_{sqrt x < d <= sqrt(x + y)} mu(d)`.
    pub boundary: i64,
    /// `sum_{d <= sqrt x} #{n : x < d^2 n^5 <= x + y}`, counted over `d`.
    pub double_count: u64,
    /// Pairs with `n` at or below the scan interval.
    pub small_n_pairs: u64,
    /// Scan interval `(lower, upper]` for `n`: `lower` is the largest `n`
    /// with `n^5 x <= 16 y^2`, `upper = floor((2x)^{1/5})`.
    pub lower: u64,
    pub upper: u64,
    pub windows: Vec<WindowRow>,
}

impl WindowDecomposition {
    /// `|short_sum - boundary| <= double_count`.
    pub fn first_inequality_holds(&self) -> bool {
        (self.short_sum - self.boundary).unsigned_abs() <= self.double_count
    }

    /// Window pairs plus the small-`n` pairs equal the double count.
    pub fn windows_reproduce_double_count(&self) -> bool {
        self.small_n_pairs + self.windows.iter().map(|w| w.pair_count).sum::<u64>() == self.double_count
    }

    pub fn delta_guards_hold(&self) -> bool {
        self.windows.iter().all(|w| w.delta_guard)
    }

    /// Every contributing `n` is near the curve, so pairs never exceed the near count.
    pub fn pairs_within_near_counts(&self) -> bool {
        self.windows.iter().all(|w| w.pair_count <= w.near_count)
    }

    /// Windows tile `(lower, upper]` without gaps or overlaps.
    pub fn windows_cover_scan(&self) -> bool {
        let mut next = self.lower + 1;
        for w in &self.windows {
            if w.n_start != next || w.n_end < w.n_start {
                return false;
            }
            next = w.n_end + 1;
        }
        next == self.upper + 1 || (self.windows.is_empty() && self.lower >= self.upper)
    }
}

fn pow5(n: u64) -> u128 {
    checked_pow(n, 5).expect("n^5 fits u128 for n below 2^25")
}

/// `#{d <= cap : a < d^2 n^5 <= b}` for `n >= 1`.
fn pairs_at(n: u64, a: u64, b: u64, cap: u64) -> u64 {
    let n5 = pow5(n);
    let top = |t: u64| -> u64 {
        if (t as u128) < n5 {
            0
        } else {
            isqrt((t as u128 / n5) as u64)
        }
    };
    top(b).min(cap).saturating_sub(top(a).min(cap))
}

/// Exact counts behind the short-interval bound: the short sum, the boundary
/// term, the double count over `(d, n)` and its split over dyadic windows of
/// `n`, with the near-curve count of each window.
pub fn window_decomposition(inst: &ShortIntervalInstance, settings: &Settings) -> Result<WindowDecomposition> {
    inst.validate(true)?;
    let (x, y) = (inst.x, inst.y);
    let z = x + y;
    let short_sum = short_interval_sum(inst, settings)?;
    let (sx, sz) = (isqrt(x), isqrt(z));
    let mu = mobius_sieve(sz as usize, settings)?;
    let boundary: i64 = (sx + 1..=sz).map(|d| mu.get(d as usize)).sum();
    let double_count: u64 = (1..=sx).map(|d| iroot(z / (d * d), 5) - iroot(x / (d * d), 5)).sum();

    let sixteen_y2 = 16 * (y as u128) * (y as u128);
    let mut lower = iroot(((sixteen_y2 / x as u128).min(u64::MAX as u128)) as u64, 5);
    while pow5(lower + 1) * (x as u128) <= sixteen_y2 {
        lower += 1;
    }
    while lower > 0 && pow5(lower) * (x as u128) > sixteen_y2 {
        lower -= 1;
    }
    let upper = iroot(2 * x, 5);
    let small_n_pairs: u64 = (1..=lower.min(upper)).map(|n| pairs_at(n, x, z, sx)).sum();

    let mut windows = Vec::new();
    let mut n = lower + 1;
    while n <= upper {
        let dyadic_end = (1u64 << (63 - n.leading_zeros())) * 2 - 1;
        let range = Range::of(n, x);
        let mut end = dyadic_end.min(upper);
        // Split where the range changes.
        let mut m = n;
        while m < end {
            if Range::of(m + 1, x) != range {
                end = m;
                break;
            }
            m += 1;
        }
        windows.push(window(n, end, range, inst, sx));
        n = end + 1;
    }
    Ok(WindowDecomposition {
        instance: *inst,
        short_sum,
        boundary,
        double_count,
        small_n_pairs,
        lower,
        upper,
        windows,
    })
}

fn window(start: u64, end: u64, range: Range, inst: &ShortIntervalInstance, cap: u64) -> WindowRow {
    let (x, y) = (inst.x, inst.y);
    let n5x = pow5(start) * x as u128;
    let y2 = (y as u128) * (y as u128);
    let pair_count = (start..=end).map(|n| pairs_at(n, x, x + y, cap)).sum();
    // ||sqrt(x / n^5)|| < sqrt(y^2 / (N^5 x))
    let near_count = (start..=end)
        .filter(|&n| near_integer_sqrt_int(x as u128, pow5(n), y2, n5x))
        .count() as u64;
    let delta = y as f64 / ((start as f64).powi(5) * x as f64).sqrt();
    WindowRow {
        n_start: start,
        n_end: end,
        range,
        delta,
        delta_guard: 16 * y2 < n5x,
        pair_count,
        near_count,
        shapes: bound_shapes(start, x as f64, y as f64, inst.c3),
    }
}
