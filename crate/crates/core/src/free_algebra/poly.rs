use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::kernel::Scalar;

/// A monomial of the free algebra: a sequence of variable indices (all ≥ 1).
/// The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroVariable);
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_letters(letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1));
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Number of occurrences of each variable.
    pub fn multidegree(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &l in &self.0 {
            *m.entry(l).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.0.iter().map(|l| format!("x{l}")).collect();
        write!(f, "{}", s.join("*"))
    }
}

/// A noncommutative polynomial with exact coefficients: a finite map from
/// words to nonzero scalars. The zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for NCPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> NCPoly<S> {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Word::unit(), c)
    }

    /// The variable `x_i`.
    ///
    /// # Panics
    /// If `i == 0`; variables are numbered from one.
    pub fn var(i: u32) -> Self {
        assert!(i >= 1, "variables are numbered from 1");
        Self::monomial(Word(vec![i]), S::one())
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, S)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Maximum word length, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// The common length of all words, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Word::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    /// The common multidegree of all words, if every word has the same one.
    pub fn common_multidegree(&self) -> Option<BTreeMap<u32, usize>> {
        let mut it = self.terms.keys().map(Word::multidegree);
        let first = it.next()?;
        it.all(|m| m == first).then_some(first)
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect()
    }

    /// Whether every word uses each of `x_1..x_n` exactly once, `n` the degree.
    pub fn is_multilinear(&self) -> bool {
        let Some(n) = self.homogeneous_degree() else {
            return false;
        };
        self.terms.keys().all(|w| {
            let mut seen = vec![false; n];
            w.letters().iter().all(|&l| {
                let i = l as usize;
                i <= n && !std::mem::replace(&mut seen[i - 1], true)
            })
        })
    }

    /// Applies the algebra endomorphism `x_i ↦ assignment[i]`.
    pub fn substitute(&self, assignment: &BTreeMap<u32, NCPoly<S>>) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut prod = Self::constant(c.clone());
            for l in w.letters() {
                let img = assignment.get(l).ok_or(Error::MissingAssignment(*l))?;
                prod = &prod * img;
                if prod.is_zero() {
                    break;
                }
            }
            out = out + prod;
        }
        Ok(out)
    }

    /// Substitutes `1` for every variable in `vars`; used to test properness.
    pub fn set_to_one(&self, vars: &BTreeSet<u32>) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| {
            let kept: Vec<u32> = w.letters().iter().copied().filter(|l| !vars.contains(l)).collect();
            (Word(kept), c.clone())
        }))
    }

    /// Whether the polynomial vanishes when any single variable is replaced
    /// by `1`. For multilinear polynomials this is exactly properness.
    pub fn vanishes_on_unit_substitution(&self) -> bool {
        self.variables()
            .into_iter()
            .all(|v| self.set_to_one(&BTreeSet::from([v])).is_zero())
    }

    /// Renames variables by `map` (variables absent from `map` are kept).
    pub fn rename(&self, map: &BTreeMap<u32, u32>) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| {
            let letters = w
                .letters()
                .iter()
                .map(|l| *map.get(l).unwrap_or(l))
                .collect();
            (Word(letters), c.clone())
        }))
    }
}

/// Left-normed iterated commutator `[a_1, …, a_k] = [[a_1, …, a_{k-1}], a_k]`.
pub fn commutator<S: Scalar>(args: &[NCPoly<S>]) -> Result<NCPoly<S>> {
    if args.len() < 2 {
        return Err(Error::CommutatorArity(args.len()));
    }
    let mut acc = args[0].clone();
    for b in &args[1..] {
        acc = &(&acc * b) - &(b * &acc);
    }
    Ok(acc)
}

/// Commutator of variables, `[x_{i_1}, …, x_{i_k}]`.
pub fn var_commutator<S: Scalar>(indices: &[u32]) -> Result<NCPoly<S>> {
    let vars: Vec<NCPoly<S>> = indices.iter().map(|&i| NCPoly::var(i)).collect();
    commutator(&vars)
}

impl<'b, S: Scalar> Add<&'b NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn add(self, rhs: &'b NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Add for NCPoly<S> {
    type Output = NCPoly<S>;
    fn add(self, rhs: NCPoly<S>) -> NCPoly<S> {
        let mut out = self;
        for (w, c) in rhs.terms {
            out.add_term(w, c);
        }
        out
    }
}

impl<S: Scalar> Neg for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn neg(self) -> NCPoly<S> {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<S: Scalar> Neg for NCPoly<S> {
    type Output = NCPoly<S>;
    fn neg(self) -> NCPoly<S> {
        -&self
    }
}

impl<'b, S: Scalar> Sub<&'b NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn sub(self, rhs: &'b NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for NCPoly<S> {
    type Output = NCPoly<S>;
    fn sub(self, rhs: NCPoly<S>) -> NCPoly<S> {
        &self - &rhs
    }
}

impl<'b, S: Scalar> Mul<&'b NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn mul(self, rhs: &'b NCPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Mul for NCPoly<S> {
    type Output = NCPoly<S>;
    fn mul(self, rhs: NCPoly<S>) -> NCPoly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> fmt::Debug for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::free_algebra::text::format(self))
    }
}

impl<S: Scalar> fmt::Display for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::free_algebra::text::format(self))
    }
}
