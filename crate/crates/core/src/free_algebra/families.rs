//! The five polynomial families whose multilinearizations generate the
//! irreducible components of the proper cocharacter of `A`.

use std::fmt;

use crate::error::{Error, Result};
use crate::free_algebra::poly::{commutator, NCPoly};
use crate::kernel::{Permutation, Scalar};

/// Parameters of one family member: kind 1..=5, degree `m`, index `i`.
///
/// Construction enforces the parameter table together with the range that
/// keeps the leading commutator at least as long as its listed entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    kind: u8,
    m: usize,
    i: Option<usize>,
}

impl FamilySpec {
    pub fn new(kind: u8, m: usize, i: Option<usize>) -> Result<Self> {
        let bad = |reason: String| Err(Error::InvalidFamily { kind, reason });
        let (min_m, min_i, parity, max_i) = match kind {
            1 => {
                if i.is_some() {
                    return bad("kind 1 takes no parameter i".into());
                }
                if m < 2 {
                    return bad(format!("row 1 requires m >= 2, got m = {m}"));
                }
                return Ok(FamilySpec { kind, m, i: None });
            }
            2 => (4, 2, 0, m.saturating_sub(2)),
            3 => (4, 3, 1, m.saturating_sub(1)),
            4 => (5, 3, 1, m.saturating_sub(2)),
            5 => (4, 4, 0, m),
            _ => return bad(format!("unknown kind {kind}")),
        };
        let Some(i) = i else {
            return bad(format!("kind {kind} requires a parameter i"));
        };
        if m < min_m {
            return bad(format!("row {kind} requires m >= {min_m}, got m = {m}"));
        }
        if i < min_i {
            return bad(format!("row {kind} requires i >= {min_i}, got i = {i}"));
        }
        if i % 2 != parity {
            let want = if parity == 0 { "even" } else { "odd" };
            return bad(format!("row {kind} requires i {want}, got i = {i}"));
        }
        if i > max_i {
            return bad(format!("row {kind} with m = {m} requires i <= {max_i}, got i = {i}"));
        }
        Ok(FamilySpec { kind, m, i: Some(i) })
    }

    pub fn kind(&self) -> u8 {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn index(&self) -> Option<usize> {
        self.i
    }

    /// Length of the leading commutator, counting its listed entries.
    pub fn leading_length(&self) -> usize {
        let (m, i) = (self.m, self.i.unwrap_or(0));
        match self.kind {
            1 => m,
            2 => m - i,
            3 | 4 => m - i + 1,
            _ => m - i + 2,
        }
    }

    /// Every valid spec of degree `m`, ordered by kind then `i`.
    pub fn all_of_degree(m: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        if let Ok(s) = FamilySpec::new(1, m, None) {
            out.push(s);
        }
        for kind in 2..=5 {
            for i in 2..=m {
                if let Ok(s) = FamilySpec::new(kind, m, Some(i)) {
                    out.push(s);
                }
            }
        }
        out
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.i {
            None => write!(f, "f^({})_{}", self.kind, self.m),
            Some(i) => write!(f, "f^({})_{{{},{}}}", self.kind, self.m, i),
        }
    }
}

fn vars<S: Scalar>(idx: &[u32]) -> Vec<NCPoly<S>> {
    idx.iter().map(|&k| NCPoly::var(k)).collect()
}

/// `[head..., x1, …, x1]` padded with `x1` to `len` entries.
fn padded<S: Scalar>(head: &[u32], len: usize) -> Result<NCPoly<S>> {
    let mut idx = head.to_vec();
    idx.resize(len, 1);
    commutator(&vars::<S>(&idx))
}

/// `[x_{a_1}, x_{a_2}] [x_{a_3}, x_{a_4}] ⋯`.
fn pair_chain<S: Scalar>(idx: &[u32]) -> Result<NCPoly<S>> {
    let mut acc = NCPoly::one();
    for pair in idx.chunks(2) {
        acc = &acc * &commutator(&vars::<S>(pair))?;
    }
    Ok(acc)
}

/// Builds the family polynomial for `spec`.
pub fn family<S: Scalar>(spec: &FamilySpec) -> Result<NCPoly<S>> {
    let len = spec.leading_length();
    let out = match (spec.kind, spec.i) {
        (1, _) => padded(&[2], len)?,
        (2, Some(i)) => {
            let chain: Vec<u32> = (1..=i as u32).collect();
            &padded(&[2], len)? * &pair_chain(&chain)?
        }
        (kind, Some(i)) => {
            let mut sum = NCPoly::zero();
            for sigma in Permutation::all(i) {
                let s: Vec<u32> = sigma.images().iter().map(|&v| v as u32).collect();
                let (lead, rest) = match kind {
                    3 => (padded(&[s[0]], len)?, &s[1..]),
                    4 => (padded(&[2, 1, s[0]], len)?, &s[1..]),
                    _ => (padded(&[s[0], s[1]], len)?, &s[2..]),
                };
                let term = &lead * &pair_chain(rest)?;
                sum = if sigma.sign() > 0 { sum + term } else { sum - term };
            }
            sum
        }
        _ => unreachable!("FamilySpec::new validates kind and i"),
    };
    debug_assert!(out.is_zero() || out.homogeneous_degree() == Some(spec.m));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::text::parse;
    use crate::kernel::Rational;

    fn p(s: &str) -> NCPoly<Rational> {
        parse(s).unwrap()
    }

    #[test]
    fn small_members() {
        let f1 = family::<Rational>(&FamilySpec::new(1, 3, None).unwrap()).unwrap();
        assert_eq!(f1, p("[x2,x1,x1]"));
        let f2 = family::<Rational>(&FamilySpec::new(2, 4, Some(2)).unwrap()).unwrap();
        assert_eq!(f2, p("[x2,x1]*[x1,x2]"));
        let f2b = family::<Rational>(&FamilySpec::new(2, 7, Some(4)).unwrap()).unwrap();
        assert_eq!(f2b, p("[x2,x1,x1]*[x1,x2]*[x3,x4]"));
    }

    #[test]
    fn alternating_sums() {
        let f3 = family::<Rational>(&FamilySpec::new(3, 4, Some(3)).unwrap()).unwrap();
        let mut expected = NCPoly::zero();
        for sigma in Permutation::all(3) {
            let s = sigma.images();
            let t = p(&format!("[x{},x1]*[x{},x{}]", s[0], s[1], s[2]));
            expected = if sigma.sign() > 0 { expected + t } else { expected - t };
        }
        assert_eq!(f3, expected);
        let f5 = family::<Rational>(&FamilySpec::new(5, 4, Some(4)).unwrap()).unwrap();
        assert_eq!(f5.homogeneous_degree(), Some(4));
        let f4 = family::<Rational>(&FamilySpec::new(4, 5, Some(3)).unwrap()).unwrap();
        assert_eq!(f4.homogeneous_degree(), Some(5));
    }

    #[test]
    fn parameter_table() {
        assert!(FamilySpec::new(1, 1, None).is_err());
        assert!(FamilySpec::new(1, 2, Some(2)).is_err());
        let e = FamilySpec::new(2, 4, Some(3)).unwrap_err();
        assert!(e.to_string().contains("even"), "{e}");
        assert!(FamilySpec::new(2, 3, Some(2)).is_err());
        assert!(FamilySpec::new(3, 4, Some(4)).is_err());
        assert!(FamilySpec::new(4, 4, Some(3)).is_err());
        assert!(FamilySpec::new(5, 4, Some(2)).is_err());
        assert!(FamilySpec::new(5, 4, Some(6)).is_err());
        assert!(FamilySpec::new(6, 4, Some(2)).is_err());
        assert!(FamilySpec::new(2, 4, None).is_err());
    }

    #[test]
    fn specs_match_the_decomposition_of_gamma_m() {
        // per degree m >= 5: one f1, f2 for even i in 2..=m-2, f3 odd 3..=m-1,
        // f4 odd 3..=m-2, f5 even 4..=m
        for m in 5..=9 {
            let specs = FamilySpec::all_of_degree(m);
            let count = |k: u8| specs.iter().filter(|s| s.kind() == k).count();
            assert_eq!(count(1), 1);
            assert_eq!(count(2), (2..=m - 2).filter(|i| i % 2 == 0).count());
            assert_eq!(count(3), (3..=m - 1).filter(|i| i % 2 == 1).count());
            assert_eq!(count(4), (3..=m - 2).filter(|i| i % 2 == 1).count());
            assert_eq!(count(5), (4..=m).filter(|i| i % 2 == 0).count());
        }
        let four: Vec<String> = FamilySpec::all_of_degree(4).iter().map(|s| s.to_string()).collect();
        assert_eq!(four, ["f^(1)_4", "f^(2)_{4,2}", "f^(3)_{4,3}", "f^(5)_{4,4}"]);
    }
}
