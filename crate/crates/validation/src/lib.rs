//! Independent reference implementations used by the acceptance suite.
//!
//! Nothing here calls into `lqlab-core`. Every function is deliberately
//! naive (trial division, bisection, big-integer fixed point) so that its
//! correctness can be read off directly.

use num::bigint::BigUint;
use num::rational::Ratio;
use num::{Integer, One, Zero};

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Largest r with r^k <= n, by bisection.
pub fn root(n: u64, k: u32) -> u64 {
    assert!(k >= 1);
    if k == 1 {
        return n;
    }
    let (mut lo, mut hi) = (0u64, 1u64 << (64 / k + 1));
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match (mid as u128).checked_pow(k) {
            Some(v) if v <= n as u128 => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

/// Mobius function by trial division.
pub fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// b^e mod m, for m < 2^32.
pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Whether `||X / n^s|| < delta`, decided exactly.
///
/// `X` and `delta` are taken as the exact binary values of the `f64`s.
/// `floor(f 2^K)` is the integer `q`-th root of `floor(X^q 2^{Kq} / n^p)`
/// for `s = p/q`, with K at least 160 bits.
pub fn near_curve_exact(scale: f64, s: Ratio<i64>, n: u64, delta: f64) -> bool {
    let (p, q) = (*s.numer() as u32, *s.denom() as u32);
    let (xm, xe) = mantissa(scale);
    let (dm, de) = mantissa(delta);
    let k = 160 + (-xe).max(-de).max(0);
    let num = BigUint::from(xm).pow(q) << ((xe + k) as usize * q as usize);
    let den = BigUint::from(n).pow(p);
    let (quot, rem) = num.div_rem(&den);
    let f_fixed = quot.nth_root(q);
    let exact = rem.is_zero() && f_fixed.pow(q) == quot;
    let unit = BigUint::one() << k as usize;
    let frac = &f_fixed % &unit;
    let d = BigUint::from(dm) << (de + k) as usize;
    // distance to floor: the true fraction lies in [frac, frac + 1) units
    if frac < d {
        return true;
    }
    // distance to ceiling: 1 - frac < delta  <=>  frac > unit - d
    let edge = &unit - &d;
    frac > edge || (frac == edge && !exact)
}

fn mantissa(v: f64) -> (u64, i64) {
    let bits = v.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1 << 52) - 1);
    assert!(v > 0.0 && exp > 0, "normal positive input");
    (frac | (1 << 52), exp - 1075)
}
