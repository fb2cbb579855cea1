use crate::{Error, Result};

/// Deterministic primality by trial division; the moduli in scope are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Jacobi symbol `(a/n)` for odd positive `n`, by quadratic reciprocity.
pub fn jacobi_symbol(a: i64, n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        // (2/n) = -1 iff n = 3, 5 mod 8
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            t = -t;
        }
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// The Legendre character `(. / q)` for an odd prime `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LegendreChar {
    q: u64,
}

impl LegendreChar {
    pub fn new(q: u64) -> Result<Self> {
        if q <= 2 || !is_prime(q) {
            return Err(Error::arg(format!("q = {q} is not an odd prime")));
        }
        Ok(LegendreChar { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn eval(&self, a: i64) -> i8 {
        jacobi_symbol(a, self.q)
    }

    /// Values of the character on `0..q`.
    pub fn table(&self) -> Vec<i8> {
        (0..self.q as i64).map(|a| self.eval(a)).collect()
    }
}

pub fn legendre_symbol(a: i64, chi: LegendreChar) -> i8 {
    chi.eval(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_criterion(a: i64, q: u64) -> i8 {
        let a = a.rem_euclid(q as i64) as u128;
        if a == 0 {
            return 0;
        }
        let (mut base, mut e, mut acc) = (a, (q - 1) / 2, 1u128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q as u128;
            }
            base = base * base % q as u128;
            e >>= 1;
        }
        if acc == 1 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn small_values() {
        let seven = LegendreChar::new(7).unwrap();
        assert_eq!(legendre_symbol(3, seven), -1);
        assert_eq!(legendre_symbol(7, seven), 0);
        assert_eq!(legendre_symbol(-7, seven), 0);
        for q in [3, 5, 11, 13, 101] {
            let c = LegendreChar::new(q).unwrap();
            assert_eq!(c.eval(1), 1);
            assert_eq!(c.eval(q as i64), 0);
        }
    }

    #[test]
    fn rejects_non_odd_primes() {
        for q in [0, 1, 2, 4, 9, 15, 91] {
            assert!(LegendreChar::new(q).is_err(), "{q}");
        }
    }

    #[test]
    fn agrees_with_square_table_below_200() {
        for q in (3..200).filter(|&q| is_prime(q)) {
            let chi = LegendreChar::new(q).unwrap();
            let squares: Vec<u64> = (1..q).map(|i| i * i % q).collect();
            for a in 0..q {
                let expected = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(chi.eval(a as i64), expected, "({a}/{q})");
                assert_eq!(chi.eval(a as i64 - 3 * q as i64), expected);
            }
        }
    }

    #[test]
    fn agrees_with_euler_criterion_and_is_multiplicative() {
        for q in [3u64, 5, 7, 23, 1009, 65_537] {
            let chi = LegendreChar::new(q).unwrap();
            for a in -50i64..500 {
                assert_eq!(chi.eval(a), euler_criterion(a, q));
                for b in [2i64, 3, 17, -5] {
                    assert_eq!(chi.eval(a * b), chi.eval(a) * chi.eval(b));
                }
            }
        }
    }
}
