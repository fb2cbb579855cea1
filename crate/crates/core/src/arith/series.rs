use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exact integer coefficients `a(1), ..., a(N)` of an arithmetic function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffSeries {
    // values[0] is a placeholder so that values[n] = a(n)
    values: Vec<i64>,
}

impl CoeffSeries {
    /// Series built from `a(1..=N)`.
    pub fn from_values(values: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut v = vec![0];
        v.extend(values);
        if v.len() < 2 {
            return Err(Error::arg("a coefficient series needs at least one entry"));
        }
        Ok(CoeffSeries { values: v })
    }

    pub fn from_fn(limit: usize, mut f: impl FnMut(usize) -> i64) -> Self {
        assert!(limit >= 1, "limit must be positive");
        let mut values = Vec::with_capacity(limit + 1);
        values.push(0);
        values.extend((1..=limit).map(&mut f));
        CoeffSeries { values }
    }

    pub(crate) fn from_raw(values: Vec<i64>) -> Self {
        debug_assert!(values.len() >= 2 && values[0] == 0);
        CoeffSeries { values }
    }

    /// The convolution identity `e`: 1 at n = 1, 0 elsewhere.
    pub fn unit(limit: usize) -> Self {
        Self::from_fn(limit, |n| i64::from(n == 1))
    }

    /// The constant function `1`.
    pub fn one(limit: usize) -> Self {
        Self::from_fn(limit, |_| 1)
    }

    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    /// `a(n)`; panics outside `1..=N`.
    pub fn get(&self, n: usize) -> i64 {
        assert!(n >= 1 && n <= self.limit(), "index {n} outside 1..={}", self.limit());
        self.values[n]
    }

    /// `a(1..=N)` as a slice (slice index `i` holds `a(i + 1)`).
    pub fn values(&self) -> &[i64] {
        &self.values[1..]
    }

    pub(crate) fn raw(&self) -> &[i64] {
        &self.values
    }

    /// Running sums `A(x) = sum_{n <= x} a(n)` for `x = 1..=N`.
    pub fn prefix_sums(&self) -> Result<Vec<i64>> {
        let mut acc = 0i64;
        self.values()
            .iter()
            .map(|&v| {
                acc = acc.checked_add(v).ok_or(Error::Overflow("prefix sum"))?;
                Ok(acc)
            })
            .collect()
    }

    /// First `n` with `self(n) != other(n)`.
    pub fn first_mismatch(&self, other: &CoeffSeries) -> Option<usize> {
        self.values()
            .iter()
            .zip(other.values())
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
    }

    pub fn truncate(&self, limit: usize) -> CoeffSeries {
        assert!(limit >= 1 && limit <= self.limit());
        CoeffSeries {
            values: self.values[..=limit].to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_is_one_based() {
        let s = CoeffSeries::from_values([5, 6, 7]).unwrap();
        assert_eq!(s.limit(), 3);
        assert_eq!(s.get(1), 5);
        assert_eq!(s.get(3), 7);
        assert_eq!(s.values(), &[5, 6, 7]);
        assert_eq!(s.prefix_sums().unwrap(), vec![5, 11, 18]);
    }

    #[test]
    #[should_panic]
    fn index_zero_panics() {
        CoeffSeries::one(4).get(0);
    }

    #[test]
    fn empty_is_rejected() {
        assert!(CoeffSeries::from_values(Vec::new()).is_err());
    }

    #[test]
    fn mismatch_reports_smallest_index() {
        let a = CoeffSeries::one(10);
        let mut v = vec![1; 10];
        v[6] = 2;
        v[8] = 0;
        let b = CoeffSeries::from_values(v).unwrap();
        assert_eq!(a.first_mismatch(&b), Some(7));
        assert_eq!(a.first_mismatch(&a), None);
    }

    #[test]
    fn prefix_overflow_is_an_error() {
        let s = CoeffSeries::from_values([i64::MAX, 1]).unwrap();
        assert_eq!(s.prefix_sums(), Err(Error::Overflow("prefix sum")));
    }
}
