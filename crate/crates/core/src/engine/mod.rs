//! Identity testing: evaluation, identity spaces, T-ideal components and
//! their comparison.
//!
//! Evaluation sweeps run on the ambient rayon pool; results do not depend on
//! the number of threads because rows are merged in enumeration order and
//! the stored spaces are in reduced echelon form.

mod cochar;
mod eval;
mod identity;
mod subspace;
mod tideal;

pub use cochar::{cocharacter_dims, CocharTarget, Cocharacter, Component};
pub use eval::{evaluate, evaluate_ncpoly, TupleStrategy};
pub use identity::{
    codim, gamma_dim, identity_space, identity_space_bounded, is_identity, is_identity_e, IdentityVerdict, Mode,
    Model, Target, Witness,
};
pub use subspace::{compare_identity_spaces, Comparison, Relation, Subspace};
pub use tideal::{gamma_projection, proper_part, tideal_component};
