//! The finite Grassmann algebra `E⁽ⁿ⁾` on generators `e_1..e_n`.
//!
//! A basis monomial `e_{i_1}⋯e_{i_k}` (`i_1 < ⋯ < i_k`) is a bit mask with
//! bit `i - 1` set for each generator `e_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::kernel::Scalar;

pub const MAX_RANK: usize = 64;

/// Sign of `e_S · e_T` relative to `e_{S∪T}`, or `None` when `S ∩ T ≠ ∅`.
///
/// The sign is `(-1)^k` with `k` the number of pairs `(i, j)`, `i ∈ S`,
/// `j ∈ T`, `i > j`: each generator of `T` must move left past the larger
/// generators of `S`.
#[inline]
pub fn mask_sign(s: u64, t: u64) -> Option<i8> {
    if s & t != 0 {
        return None;
    }
    let mut parity = 0u32;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        // generators of s above j
        parity ^= (s >> j >> 1).count_ones() & 1;
    }
    Some(if parity == 0 { 1 } else { -1 })
}

#[derive(Clone, PartialEq, Eq)]
pub struct GrassmannElement<S> {
    rank: usize,
    terms: BTreeMap<u64, S>,
}

impl<S: Scalar> GrassmannElement<S> {
    pub fn zero(rank: usize) -> Result<Self> {
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        Ok(GrassmannElement {
            rank,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(rank: usize) -> Result<Self> {
        Self::monomial(rank, 0, S::one())
    }

    /// The generator `e_i`, `1 ≤ i ≤ rank`.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::InvalidParameter(format!(
                "generator e{i} outside 1..={rank}"
            )));
        }
        Self::monomial(rank, 1 << (i - 1), S::one())
    }

    /// `c · e_{i_1}⋯e_{i_k}` for the generators in `subset` (any order,
    /// the sign of the reordering is applied; repeated generators give zero).
    pub fn from_subset(rank: usize, subset: &[usize], c: S) -> Result<Self> {
        let mut out = Self::one(rank)?;
        for &i in subset {
            out = out.mul(&Self::generator(rank, i)?)?;
        }
        Ok(out.scale(&c))
    }

    pub fn monomial(rank: usize, mask: u64, c: S) -> Result<Self> {
        let mut out = Self::zero(rank)?;
        if rank < 64 && mask >> rank != 0 {
            return Err(Error::InvalidParameter(format!(
                "mask {mask:#b} uses generators beyond rank {rank}"
            )));
        }
        if !c.is_zero() {
            out.terms.insert(mask, c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &S)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u64) -> S {
        self.terms.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u64, c: S) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&mask) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(mask, v);
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = GrassmannElement {
            rank: self.rank,
            terms: BTreeMap::new(),
        };
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(*m, x.clone() * c.clone());
        }
        out
    }

    /// Same element viewed in a Grassmann algebra of larger rank.
    pub fn widen(&self, rank: usize) -> Result<Self> {
        if rank < self.rank {
            return Err(Error::RankMismatch(self.rank, rank));
        }
        let mut out = self.clone();
        out.rank = rank;
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        g_mul(self, other)
    }

    /// `(even, odd)` components.
    pub fn parity_split(&self) -> (Self, Self) {
        parity_split(self)
    }

    /// `Some(0)` if every monomial has even length, `Some(1)` if odd,
    /// `None` when both occur. Zero counts as even.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.count_ones() % 2);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }
}

pub fn g_mul<S: Scalar>(a: &GrassmannElement<S>, b: &GrassmannElement<S>) -> Result<GrassmannElement<S>> {
    a.check_rank(b)?;
    let mut out = GrassmannElement::zero(a.rank)?;
    for (s, x) in &a.terms {
        for (t, y) in &b.terms {
            if let Some(sign) = mask_sign(*s, *t) {
                let v = x.clone() * y.clone();
                out.add_term(s | t, if sign > 0 { v } else { -v });
            }
        }
    }
    Ok(out)
}

pub fn parity_split<S: Scalar>(a: &GrassmannElement<S>) -> (GrassmannElement<S>, GrassmannElement<S>) {
    let mut even = GrassmannElement {
        rank: a.rank,
        terms: BTreeMap::new(),
    };
    let mut odd = even.clone();
    for (m, c) in &a.terms {
        let target = if m.count_ones() % 2 == 0 { &mut even } else { &mut odd };
        target.terms.insert(*m, c.clone());
    }
    (even, odd)
}

/// The `2ⁿ` subset monomials, mask ascending.
pub fn grassmann_basis<S: Scalar>(n: usize) -> Result<Vec<GrassmannElement<S>>> {
    if n >= 32 {
        return Err(Error::RankTooLarge(n));
    }
    (0..1u64 << n)
        .map(|m| GrassmannElement::monomial(n, m, S::one()))
        .collect()
}

/// `e{1}e{3}` for the mask `0b101`, `1` for the empty mask.
pub fn format_mask(mask: u64) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut s = String::new();
    let mut rest = mask;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        s.push_str(&format!("e{{{}}}", j + 1));
    }
    s
}

/// Renders `coefficient` times `body`, folding unit coefficients into signs.
pub(crate) fn format_term<S: Scalar>(out: &mut String, first: bool, c: &S, body: &str, body_is_unit: bool) {
    let q = c.to_big_rational();
    let abs = q.abs();
    match (first, q.is_negative()) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    if body_is_unit {
        out.push_str(&abs.to_string());
    } else if abs.is_one() {
        out.push_str(body);
    } else if abs.is_integer() {
        out.push_str(&format!("{abs}{body}"));
    } else {
        out.push_str(&format!("({abs}){body}"));
    }
}

impl<S: Scalar> fmt::Display for GrassmannElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            format_term(&mut out, k == 0, c, &format_mask(*m), *m == 0);
        }
        write!(f, "{out}")
    }
}

impl<S: Scalar> fmt::Debug for GrassmannElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Rational;
    use proptest::prelude::*;

    type G = GrassmannElement<Rational>;

    fn e(rank: usize, subset: &[usize]) -> G {
        G::from_subset(rank, subset, Rational::from(1)).unwrap()
    }

    fn one(rank: usize) -> G {
        G::one(rank).unwrap()
    }

    /// Reference product: sort the concatenated generator list by bubble
    /// sort, flipping the sign per swap and vanishing on repeats.
    fn oracle_monomial_product(s: &[usize], t: &[usize]) -> Option<(Vec<usize>, i8)> {
        let mut w: Vec<usize> = s.iter().chain(t).copied().collect();
        let mut sign = 1i8;
        for i in 0..w.len() {
            for j in 0..w.len() - 1 - i {
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if w.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some((w, sign))
    }

    fn subset_of(mask: u64) -> Vec<usize> {
        (0..64).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect()
    }

    #[test]
    fn products_of_generators() {
        assert_eq!(e(2, &[1]).mul(&e(2, &[2])).unwrap(), e(2, &[1, 2]));
        assert_eq!(e(2, &[2]).mul(&e(2, &[1])).unwrap(), e(2, &[1, 2]).neg());
        assert_eq!(e(2, &[2, 1]), e(2, &[1, 2]).neg());
        assert!(e(2, &[1]).mul(&e(2, &[1])).unwrap().is_zero());
        let a = one(2).add(&e(2, &[1])).unwrap();
        let b = one(2).add(&e(2, &[2])).unwrap();
        let expected = one(2).add(&e(2, &[1])).unwrap().add(&e(2, &[2])).unwrap().add(&e(2, &[1, 2])).unwrap();
        assert_eq!(a.mul(&b).unwrap(), expected);
        assert!(matches!(e(2, &[1]).mul(&e(3, &[1])), Err(Error::RankMismatch(2, 3))));
    }

    #[test]
    fn mask_sign_matches_bubble_sort() {
        for s in 0u64..32 {
            for t in 0u64..32 {
                let got = mask_sign(s, t);
                let want = oracle_monomial_product(&subset_of(s), &subset_of(t)).map(|(_, sg)| sg);
                assert_eq!(got, want, "{s:b} {t:b}");
            }
        }
    }

    #[test]
    fn parity_examples() {
        let (ev, od) = one(3).add(&e(3, &[1])).unwrap().parity_split();
        assert_eq!((ev, od), (one(3), e(3, &[1])));
        let (ev, od) = e(3, &[1, 2]).parity_split();
        assert_eq!((ev, od), (e(3, &[1, 2]), G::zero(3).unwrap()));
        let x = e(3, &[1]).add(&e(3, &[1, 2, 3])).unwrap();
        assert_eq!(x.parity_split(), (G::zero(3).unwrap(), x.clone()));
        assert_eq!(x.parity(), Some(1));
    }

    #[test]
    fn basis_listing() {
        assert_eq!(grassmann_basis::<Rational>(0).unwrap(), vec![one(0)]);
        assert_eq!(
            grassmann_basis::<Rational>(2).unwrap(),
            vec![one(2), e(2, &[1]), e(2, &[2]), e(2, &[1, 2])]
        );
        let b3 = grassmann_basis::<Rational>(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.iter().filter(|x| x.parity() == Some(0)).count(), 4);
    }

    #[test]
    fn rendering() {
        let x = e(3, &[1, 3]).scale(&Rational::from(2)).add(&one(3).neg()).unwrap();
        assert_eq!(x.to_string(), "-1 + 2e{1}e{3}");
        assert_eq!(e(3, &[2]).scale(&Rational::new(-1, 2)).to_string(), "-(1/2)e{2}");
    }

    #[test]
    fn grassmann_is_a_model_of_the_triple_commutator() {
        // [a,b,c] vanishes on all basis triples of E(4)
        let basis = grassmann_basis::<Rational>(4).unwrap();
        let comm = |x: &G, y: &G| x.mul(y).unwrap().sub(&y.mul(x).unwrap()).unwrap();
        for a in &basis {
            for b in &basis {
                let ab = comm(a, b);
                for c in &basis {
                    assert!(comm(&ab, c).is_zero());
                }
            }
        }
    }

    fn arb_elem(rank: usize) -> impl Strategy<Value = G> {
        prop::collection::vec((0u64..(1 << rank), -3i64..=3), 0..6).prop_map(move |ts| {
            let mut x = G::zero(rank).unwrap();
            for (m, c) in ts {
                x = x.add(&G::monomial(rank, m, Rational::from(c)).unwrap()).unwrap();
            }
            x
        })
    }

    proptest! {
        #[test]
        fn associativity(a in arb_elem(6), b in arb_elem(6), c in arb_elem(6)) {
            let l = a.mul(&b).unwrap().mul(&c).unwrap();
            let r = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn odd_elements_square_to_zero(a in arb_elem(6)) {
            let (_, odd) = a.parity_split();
            prop_assert!(odd.mul(&odd).unwrap().is_zero());
        }

        #[test]
        fn even_part_is_central(a in arb_elem(6), x in arb_elem(6)) {
            let (even, _) = a.parity_split();
            prop_assert_eq!(even.mul(&x).unwrap(), x.mul(&even).unwrap());
        }

        #[test]
        fn multiplication_matches_oracle(s in 0u64..64, t in 0u64..64) {
            let got = G::monomial(6, s, Rational::from(1)).unwrap().mul(&G::monomial(6, t, Rational::from(1)).unwrap()).unwrap();
            match oracle_monomial_product(&subset_of(s), &subset_of(t)) {
                None => prop_assert!(got.is_zero()),
                Some((w, sign)) => prop_assert_eq!(got, e(6, &w).scale(&Rational::from(sign as i64))),
            }
        }
    }
}
