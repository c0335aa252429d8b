use std::fmt;

use crate::error::{Error, Result};
use crate::free_algebra::{proper_basis, MultilinearPoly};
use crate::kernel::{factorial, DenseRowSpace, Scalar};

/// A subspace of `P_n`, stored in reduced echelon form over the monomial
/// basis. The `proper` flag records that it lies inside `Γ_n`.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    degree: usize,
    proper: bool,
    space: DenseRowSpace<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(degree: usize, proper: bool) -> Self {
        Subspace {
            degree,
            proper,
            space: DenseRowSpace::new(factorial(degree) as usize),
        }
    }

    /// The span of the given polynomials.
    pub fn span<'a, I>(degree: usize, proper: bool, polys: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a MultilinearPoly<S>>,
    {
        let mut out = Self::zero(degree, proper);
        for p in polys {
            out.insert(p)?;
        }
        Ok(out)
    }

    /// All of `Γ_n`.
    pub fn gamma(degree: usize) -> Self {
        let basis = proper_basis::<S>(degree);
        Self::span(degree, true, &basis).expect("basis has the right degree")
    }

    pub(crate) fn from_space(degree: usize, proper: bool, space: DenseRowSpace<S>) -> Self {
        debug_assert_eq!(space.width() as u128, factorial(degree));
        Subspace { degree, proper, space }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn dim(&self) -> usize {
        self.space.rank()
    }

    pub fn space(&self) -> &DenseRowSpace<S> {
        &self.space
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n != self.degree {
            return Err(Error::DegreeMismatch(self.degree, n));
        }
        Ok(())
    }

    pub fn insert(&mut self, f: &MultilinearPoly<S>) -> Result<bool> {
        self.check_degree(f.degree())?;
        self.space.rank_insert(f.coeffs())
    }

    pub fn contains(&self, f: &MultilinearPoly<S>) -> Result<bool> {
        self.check_degree(f.degree())?;
        self.space.contains(f.coeffs())
    }

    /// The echelon basis, as polynomials.
    pub fn basis(&self) -> Vec<MultilinearPoly<S>> {
        self.space
            .rows()
            .iter()
            .map(|r| MultilinearPoly::from_sparse(self.degree, r))
            .collect()
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_degree(other.degree)?;
        Ok(self.space.is_subspace_of(&other.space))
    }

    /// First echelon basis vector of `self` outside `other`.
    pub fn first_outside(&self, other: &Self) -> Result<Option<MultilinearPoly<S>>> {
        self.check_degree(other.degree)?;
        Ok(self
            .space
            .rows()
            .iter()
            .find(|r| !other.space.contains_sparse(r))
            .map(|r| MultilinearPoly::from_sparse(self.degree, r)))
    }

    /// Exact intersection: the residuals of `other`'s basis modulo `self`
    /// are stacked next to an identity block, and the rows whose residual
    /// part eliminates to zero give the combinations of `other` that land
    /// in `self`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_degree(other.degree)?;
        let width = self.space.width();
        let k = other.dim();
        let mut stacked = DenseRowSpace::new(width + k);
        for (j, row) in other.space.rows().iter().enumerate() {
            let dense = crate::kernel::rowspace::to_dense(row, width);
            let mut r = self.space.residual(&dense)?;
            r.resize(width + k, S::zero());
            r[width + j] = S::one();
            stacked.rank_insert(&r)?;
        }
        let mut out = Self::zero(self.degree, self.proper || other.proper);
        let basis = other.space.rows();
        for (row, &p) in stacked.rows().iter().zip(stacked.pivots()) {
            if p < width {
                continue;
            }
            let mut v = vec![S::zero(); width];
            for (j, c) in row {
                for (col, x) in &basis[j - width] {
                    v[*col] = v[*col].clone() + c.clone() * x.clone();
                }
            }
            out.space.rank_insert(&v)?;
        }
        Ok(out)
    }
}

/// Equality of the spanned subspaces (the proper flag is not compared).
impl<S: Scalar> PartialEq for Subspace<S> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.space.rows() == other.space.rows()
    }
}

/// How two subspaces of the same `P_n` relate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Equal,
    LhsStrictlySmaller,
    RhsStrictlySmaller,
    Incomparable,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::Equal => "equal",
            Relation::LhsStrictlySmaller => "lhs_strictly_smaller",
            Relation::RhsStrictlySmaller => "rhs_strictly_smaller",
            Relation::Incomparable => "incomparable",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct Comparison<S: Scalar> {
    pub relation: Relation,
    /// A vector in one space and not the other; for an incomparable pair it
    /// comes from `lhs`.
    pub witness: Option<MultilinearPoly<S>>,
}

pub fn compare_identity_spaces<S: Scalar>(lhs: &Subspace<S>, rhs: &Subspace<S>) -> Result<Comparison<S>> {
    let l_out = lhs.first_outside(rhs)?;
    let r_out = rhs.first_outside(lhs)?;
    let relation = match (&l_out, &r_out) {
        (None, None) => Relation::Equal,
        (None, Some(_)) => Relation::LhsStrictlySmaller,
        (Some(_), None) => Relation::RhsStrictlySmaller,
        (Some(_), Some(_)) => Relation::Incomparable,
    };
    Ok(Comparison {
        relation,
        witness: l_out.or(r_out),
    })
}
