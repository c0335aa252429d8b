use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::free_algebra::poly::{NCPoly, Word};
use crate::kernel::perm::{lex_rank, lex_unrank, next_permutation};
use crate::kernel::{factorial, Scalar};

/// An element of `P_n`: the coefficient of `x_{σ(1)}⋯x_{σ(n)}` is stored at
/// the lexicographic rank of `σ`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultilinearPoly<S> {
    n: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> MultilinearPoly<S> {
    pub fn zero(n: usize) -> Self {
        MultilinearPoly {
            n,
            coeffs: vec![S::zero(); factorial(n) as usize],
        }
    }

    /// Wraps a coefficient vector of length `n!`.
    pub fn from_coeffs(n: usize, coeffs: Vec<S>) -> Result<Self> {
        let width = factorial(n) as usize;
        if coeffs.len() != width {
            return Err(Error::WidthMismatch {
                expected: width,
                found: coeffs.len(),
            });
        }
        Ok(MultilinearPoly { n, coeffs })
    }

    pub fn from_sparse(n: usize, entries: &[(usize, S)]) -> Self {
        let mut p = Self::zero(n);
        for (j, c) in entries {
            p.coeffs[*j] = c.clone();
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero `(rank, coefficient)` pairs in rank order.
    pub fn support(&self) -> Vec<(usize, S)> {
        crate::kernel::rowspace::to_sparse(&self.coeffs)
    }

    /// The word with lexicographic rank `rank`, as one-based variable indices.
    pub fn word_at(n: usize, rank: usize) -> Vec<u32> {
        lex_unrank(n, rank).into_iter().map(|v| v as u32 + 1).collect()
    }

    /// Rank of a multilinear word in `x_1..x_n`.
    pub fn rank_of(word: &[u32]) -> usize {
        let z: Vec<usize> = word.iter().map(|&l| l as usize - 1).collect();
        lex_rank(&z)
    }

    /// Accepts exactly the polynomials whose words each use `x_1..x_n` once.
    pub fn from_ncpoly(f: &NCPoly<S>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_multilinear() {
            return Err(Error::NotMultilinear(f.degree().unwrap_or(0)));
        }
        let n = f.degree().unwrap_or(0);
        let mut out = Self::zero(n);
        for (w, c) in f.terms() {
            out.coeffs[Self::rank_of(w.letters())] = c.clone();
        }
        Ok(out)
    }

    pub fn to_ncpoly(&self) -> NCPoly<S> {
        NCPoly::from_terms(self.support().into_iter().map(|(j, c)| {
            (Word::from_letters(Self::word_at(self.n, j)), c)
        }))
    }

    /// Applies `σ` to the variables: `x_k ↦ x_{σ(k)}`.
    pub fn permute_variables(&self, images: &[usize]) -> Self {
        let mut out = Self::zero(self.n);
        for (j, c) in self.support() {
            let w: Vec<usize> = lex_unrank(self.n, j).into_iter().map(|v| images[v] - 1).collect();
            out.coeffs[lex_rank(&w)] = c;
        }
        out
    }
}

impl<S: Scalar> fmt::Debug for MultilinearPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ncpoly())
    }
}

impl<S: Scalar> fmt::Display for MultilinearPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ncpoly())
    }
}

/// Complete multilinearization (full polarization).
///
/// A variable `x_k` of multiplicity `d > 1` is replaced by the sum of `x_k`
/// and the `d - 1` smallest indices not yet in use, taken in ascending order,
/// and the squarefree part is kept without dividing by multiplicities.
/// Finally the variables are renamed order-preservingly to `x_1..x_n`.
///
/// The input must be multihomogeneous (every word has the same multidegree).
pub fn multilinearize<S: Scalar>(f: &NCPoly<S>) -> Result<MultilinearPoly<S>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let md = f.common_multidegree().ok_or(Error::NotHomogeneous)?;
    let n: usize = md.values().sum();

    let mut used: BTreeSet<u32> = md.keys().copied().collect();
    let mut labels: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut next = 1u32;
    for (&v, &d) in &md {
        let mut ls = vec![v];
        while ls.len() < d {
            while used.contains(&next) {
                next += 1;
            }
            used.insert(next);
            ls.push(next);
        }
        labels.insert(v, ls);
    }
    let rename: BTreeMap<u32, u32> = used
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect();

    let mut out: Vec<S> = vec![S::zero(); factorial(n) as usize];
    for (w, c) in f.terms() {
        let letters = w.letters();
        let groups: Vec<(Vec<usize>, Vec<u32>)> = labels
            .iter()
            .map(|(v, ls)| {
                let pos = (0..letters.len()).filter(|&p| letters[p] == *v).collect();
                (pos, ls.clone())
            })
            .collect();
        let mut word = letters.to_vec();
        expand(&groups, 0, &mut word, &mut |w: &[u32]| {
            let renamed: Vec<u32> = w.iter().map(|v| rename[v]).collect();
            let r = MultilinearPoly::<S>::rank_of(&renamed);
            out[r] = out[r].clone() + c.clone();
        });
    }
    MultilinearPoly::from_coeffs(n, out)
}

fn expand(groups: &[(Vec<usize>, Vec<u32>)], g: usize, word: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if g == groups.len() {
        emit(word);
        return;
    }
    let (pos, labels) = &groups[g];
    let mut arr = labels.clone();
    arr.sort_unstable();
    loop {
        for (p, l) in pos.iter().zip(&arr) {
            word[*p] = *l;
        }
        expand(groups, g + 1, word, emit);
        if !next_permutation(&mut arr) {
            break;
        }
    }
}
