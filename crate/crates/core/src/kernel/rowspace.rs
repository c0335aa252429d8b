use crate::error::{Error, Result};
use crate::kernel::rational::Scalar;

/// A sparse vector: strictly increasing column indices with nonzero values.
pub type SparseVec<S> = Vec<(usize, S)>;

/// Exact row space of fixed width, kept in reduced row echelon form.
///
/// Rows are stored sparsely. Because the form is fully reduced and every pivot
/// is normalized to one, two row spaces of the same width span the same
/// subspace iff they compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseRowSpace<S> {
    width: usize,
    rows: Vec<SparseVec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> DenseRowSpace<S> {
    pub fn new(width: usize) -> Self {
        DenseRowSpace {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec<S>] {
        &self.rows
    }

    pub fn dense_row(&self, i: usize) -> Vec<S> {
        to_dense(&self.rows[i], self.width)
    }

    /// Inserts `v`; returns whether it was independent of the previous span.
    pub fn rank_insert(&mut self, v: &[S]) -> Result<bool> {
        self.check_width(v.len())?;
        let mut work = v.to_vec();
        self.reduce_in_place(&mut work);
        Ok(self.absorb(work))
    }

    /// Sparse variant of [`rank_insert`](Self::rank_insert).
    pub fn insert_sparse(&mut self, v: &[(usize, S)]) -> Result<bool> {
        if let Some(&(c, _)) = v.last() {
            if c >= self.width {
                return Err(Error::WidthMismatch {
                    expected: self.width,
                    found: c + 1,
                });
            }
        }
        let mut work = to_dense(v, self.width);
        self.reduce_in_place(&mut work);
        Ok(self.absorb(work))
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[S]) -> Result<bool> {
        Ok(self.residual(v)?.iter().all(|x| x.is_zero()))
    }

    pub fn contains_sparse(&self, v: &[(usize, S)]) -> bool {
        let mut work = to_dense(v, self.width);
        self.reduce_in_place(&mut work);
        work.iter().all(|x| x.is_zero())
    }

    /// `v` minus its projection along the pivot columns; zero iff `v` is in the span.
    pub fn residual(&self, v: &[S]) -> Result<Vec<S>> {
        self.check_width(v.len())?;
        let mut work = v.to_vec();
        self.reduce_in_place(&mut work);
        Ok(work)
    }

    /// Whether every row of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &DenseRowSpace<S>) -> bool {
        self.width == other.width && self.rows.iter().all(|r| other.contains_sparse(r))
    }

    /// A basis of `{x : r·x = 0 for every row r}`, one vector per free column.
    pub fn kernel(&self) -> Vec<SparseVec<S>> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut slot = vec![usize::MAX; self.width];
        let mut basis: Vec<SparseVec<S>> = Vec::new();
        for c in 0..self.width {
            if !is_pivot[c] {
                slot[c] = basis.len();
                basis.push(Vec::new());
            }
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (j, val) in row {
                if *j != p {
                    basis[slot[*j]].push((p, -val.clone()));
                }
            }
        }
        for c in 0..self.width {
            if !is_pivot[c] {
                let v = &mut basis[slot[c]];
                v.push((c, S::one()));
                v.sort_by_key(|(j, _)| *j);
            }
        }
        basis
    }

    fn check_width(&self, len: usize) -> Result<()> {
        if len != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: len,
            });
        }
        Ok(())
    }

    fn reduce_in_place(&self, work: &mut [S]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if work[p].is_zero() {
                continue;
            }
            let f = work[p].clone();
            for (j, r) in row {
                work[*j] = work[*j].sub_mul(&f, r);
            }
        }
    }

    /// Adds an already reduced vector as a new row, restoring full reduction.
    fn absorb(&mut self, work: Vec<S>) -> bool {
        let Some(lead) = work.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = S::one() / work[lead].clone();
        let new_row: SparseVec<S> = work
            .into_iter()
            .enumerate()
            .skip(lead)
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x * inv.clone()))
            .collect();
        for row in self.rows.iter_mut() {
            if let Ok(k) = row.binary_search_by_key(&lead, |(j, _)| *j) {
                let f = row[k].1.clone();
                *row = axpy_sparse(row, &f, &new_row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, new_row);
        true
    }
}

/// `a - f * b` for sparse vectors.
pub(crate) fn axpy_sparse<S: Scalar>(a: &[(usize, S)], f: &S, b: &[(usize, S)]) -> SparseVec<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut k) = (0, 0);
    while i < a.len() || k < b.len() {
        let take_a = k == b.len() || (i < a.len() && a[i].0 < b[k].0);
        let take_b = i == a.len() || (k < b.len() && b[k].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[k].0, -(f.clone() * b[k].1.clone())));
            k += 1;
        } else {
            let v = a[i].1.sub_mul(f, &b[k].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    out
}

pub fn to_dense<S: Scalar>(v: &[(usize, S)], width: usize) -> Vec<S> {
    let mut out = vec![S::zero(); width];
    for (j, x) in v {
        out[*j] = x.clone();
    }
    out
}

pub fn to_sparse<S: Scalar>(v: &[S]) -> SparseVec<S> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}
