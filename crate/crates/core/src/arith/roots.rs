//! Exact integer roots and powers.

/// `base^exp` if it fits in a `u128`.
pub fn checked_pow(base: u64, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

/// `base^k > n`, without overflow.
fn pow_exceeds(base: u64, k: u32, n: u64) -> bool {
    match checked_pow(base, k) {
        Some(v) => v > n as u128,
        None => true,
    }
}

/// Largest `r` with `r^k <= n`.
pub fn iroot(n: u64, k: u32) -> u64 {
    assert!(k >= 1, "root index must be positive");
    if k == 1 || n < 2 {
        return n;
    }
    // float guess, then exact correction in both directions
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    while r > 0 && pow_exceeds(r, k, n) {
        r -= 1;
    }
    while !pow_exceeds(r + 1, k, n) {
        r += 1;
    }
    r
}

pub fn isqrt(n: u64) -> u64 {
    iroot(n, 2)
}

/// `floor(log_p n)` for `p >= 2`, `n >= 1`, computed with integers only.
pub fn ilog(n: u64, p: u64) -> u32 {
    assert!(p >= 2 && n >= 1);
    let mut e = 0;
    let mut pk: u64 = p;
    while pk <= n {
        e += 1;
        match pk.checked_mul(p) {
            Some(v) => pk = v,
            None => break,
        }
    }
    e
}
