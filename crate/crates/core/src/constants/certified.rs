use serde::{Deserialize, Serialize};
use std::ops::{Add, Div, Mul, Sub};

const EPS: f64 = f64::EPSILON;

/// A real number known to lie within `error` of `value`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certified {
    pub value: f64,
    pub error: f64,
}

impl Certified {
    pub fn new(value: f64, error: f64) -> Self {
        debug_assert!(error >= 0.0);
        Certified { value, error }
    }

    pub fn exact(value: f64) -> Self {
        Certified { value, error: 0.0 }
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.error
    }

    pub fn lower(&self) -> f64 {
        self.value - self.error
    }

    pub fn upper(&self) -> f64 {
        self.value + self.error
    }

    /// Multiply by an exactly representable scalar.
    pub fn scale(self, k: f64) -> Certified {
        let v = self.value * k;
        Certified::new(v, self.error * k.abs() + EPS * v.abs())
    }
}

// Each operation adds one rounding of the result to the error.

impl Add for Certified {
    type Output = Certified;

    fn add(self, o: Certified) -> Certified {
        let v = self.value + o.value;
        Certified::new(v, self.error + o.error + EPS * v.abs())
    }
}

impl Sub for Certified {
    type Output = Certified;

    fn sub(self, o: Certified) -> Certified {
        self + Certified::new(-o.value, o.error)
    }
}

impl Mul for Certified {
    type Output = Certified;

    fn mul(self, o: Certified) -> Certified {
        let v = self.value * o.value;
        let e = self.value.abs() * o.error + o.value.abs() * self.error + self.error * o.error;
        Certified::new(v, e + EPS * v.abs())
    }
}

impl Div for Certified {
    type Output = Certified;

    /// Quotient; `o` must be bounded away from zero.
    fn div(self, o: Certified) -> Certified {
        let floor = o.value.abs() - o.error;
        assert!(floor > 0.0, "division by an interval containing zero");
        let v = self.value / o.value;
        let e = (self.error + v.abs() * o.error) / floor;
        Certified::new(v, e + EPS * v.abs())
    }
}

/// Neumaier-compensated sum that also tracks the sum of absolute values.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
    abs: f64,
    count: u64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
        self.count += 1;
    }

    pub fn merge(&mut self, other: &CompensatedSum) {
        let (abs, count) = (self.abs, self.count);
        self.add(other.sum);
        self.add(other.comp);
        self.abs = abs + other.abs;
        self.count = count + other.count + 2;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }

    #[cfg(test)]
    pub fn abs_total(&self) -> f64 {
        self.abs
    }

    /// Bound on the error of [`total`](Self::total) given per-term relative
    /// error `term_rel` in the summands themselves.
    pub fn rounding_bound(&self, term_rel: f64) -> f64 {
        term_rel * self.abs + 2.0 * EPS * self.total().abs() + (self.count as f64) * EPS * EPS * self.abs
    }
}
