//! Exact machinery for polynomial identities of the variety generated by
//! `A = (E₀ E; 0 E)` and of its relatively free algebras of finite rank.
//!
//! Everything is generic over an exact [`Scalar`]; the aliases below fix the
//! scalar to [`Rational`], which is what the rest of the workspace uses.

pub mod algebras;
pub mod engine;
pub mod error;
pub mod free_algebra;
pub mod grassmann;
pub mod kernel;

pub use error::{Error, Result};
pub use kernel::{Rational, Scalar};

pub type QPoly = free_algebra::NCPoly<Rational>;
pub type QMultilinear = free_algebra::MultilinearPoly<Rational>;
pub type QRowSpace = kernel::DenseRowSpace<Rational>;
pub type QAlgElement = algebras::AlgElement<Rational>;
pub type QSubspace = engine::Subspace<Rational>;
pub type QGrassmann = grassmann::GrassmannElement<Rational>;
