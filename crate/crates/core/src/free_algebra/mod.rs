//! The free associative unitary algebra `K⟨X⟩` and its multilinear parts.

pub mod families;
pub mod multilinear;
pub mod poly;
pub mod spanning;
pub mod text;

pub use families::{family, FamilySpec};
pub use multilinear::{multilinearize, MultilinearPoly};
pub use poly::{commutator, var_commutator, NCPoly, Word};
pub use spanning::{proper_basis, proper_spanning_set};
pub use text::{format, parse};
