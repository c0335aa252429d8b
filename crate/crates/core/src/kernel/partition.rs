use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::perm::factorial;

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// The hook shape `(a, 1^b)`.
    pub fn hook(arm: usize, leg: usize) -> Result<Self> {
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, leg));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Hook length of the cell in row `i`, column `j` (zero-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let conj = self.conjugate();
        (self.0[i] - j - 1) + (conj.0[j] - i - 1) + 1
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Largest weight whose factorial still fits the `u128` arithmetic below.
pub const MAX_HOOK_WEIGHT: usize = 33;

/// Dimension of the irreducible `S_n`-module for `lambda`, by the hook length formula.
pub fn hook_dim(lambda: &Partition) -> Result<u128> {
    let n = lambda.weight();
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    if n > MAX_HOOK_WEIGHT {
        return Err(Error::PartitionTooLarge(n));
    }
    let conj = lambda.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= ((row - j - 1) + (conj.parts()[j] - i - 1) + 1) as u128;
        }
    }
    Ok(factorial(n) / hooks)
}

/// Number of fixed-point-free permutations of `{1..n}`.
pub fn derangements(n: usize) -> u128 {
    let (mut prev, mut cur) = (1u128, 0u128);
    if n == 0 {
        return 1;
    }
    for k in 2..=n as u128 {
        let next = (k - 1) * (cur + prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_dims() {
        assert_eq!(hook_dim(&p(&[5])).unwrap(), 1);
        assert_eq!(hook_dim(&p(&[2, 1])).unwrap(), 2);
        assert_eq!(hook_dim(&p(&[3, 2, 1])).unwrap(), 16);
        assert_eq!(hook_dim(&p(&[1, 1, 1, 1])).unwrap(), 1);
        assert!(matches!(hook_dim(&p(&[])), Err(Error::EmptyPartition)));
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[3, 2]).hook_length(0, 0), 4);
        assert_eq!(Partition::hook(3, 2).unwrap(), p(&[3, 1, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn derangement_values() {
        assert_eq!(derangements(0), 1);
        assert_eq!(derangements(1), 0);
        assert_eq!(derangements(2), 1);
        assert_eq!(derangements(4), 9);
        assert_eq!(derangements(6), 265);
        assert_eq!(derangements(7), 1854);
    }
}
