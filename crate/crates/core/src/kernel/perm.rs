use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..n}` stored as its image sequence, with cached sign.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-based images
    images: Vec<usize>,
    sign: i8,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
            sign: 1,
        }
    }

    /// Builds a permutation from one-based images `[σ(1), …, σ(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[i - 1] = true;
            zero_based.push(i - 1);
        }
        Ok(Self::from_zero_based(zero_based))
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        let sign = if inversions(&images).is_multiple_of(2) { 1 } else { -1 };
        Permutation { images, sign }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-based image of the one-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// One-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    #[cfg(test)]
    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.images)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&i| self.images[i]).collect();
        Permutation {
            images,
            sign: self.sign * other.sign,
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation {
            images: inv,
            sign: self.sign,
        }
    }

    /// Position of this permutation in the lexicographic listing of `S_n`.
    pub fn lex_rank(&self) -> usize {
        lex_rank(&self.images)
    }

    /// All permutations of degree `n` in lexicographic order of image sequences.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(factorial(n) as usize);
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Self::from_zero_based(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

pub(crate) fn inversions(images: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                count += 1;
            }
        }
    }
    count
}

/// Steps `seq` to the lexicographically next arrangement; false at the last one.
pub(crate) fn next_permutation<T: Ord>(seq: &mut [T]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// Lexicographic rank of an arrangement of `0..n` (Lehmer code).
pub(crate) fn lex_rank(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0usize;
    let mut used = 0u64;
    for (pos, &v) in images.iter().enumerate() {
        let smaller_unused = (0..v).filter(|&u| used & (1 << u) == 0).count();
        rank += smaller_unused * factorial(n - pos - 1) as usize;
        used |= 1 << v;
    }
    rank
}

/// Inverse of [`lex_rank`].
pub(crate) fn lex_unrank(n: usize, mut rank: usize) -> Vec<usize> {
    let mut avail: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for pos in 0..n {
        let f = factorial(n - pos - 1) as usize;
        let k = rank / f;
        rank %= f;
        out.push(avail.remove(k));
    }
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
