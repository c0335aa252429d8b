//! Exact scalars and the combinatorial substrate.

pub mod partition;
pub mod perm;
pub mod rational;
pub mod rowspace;
pub mod setpart;

pub use partition::{derangements, hook_dim, Partition};
pub use perm::{factorial, Permutation};
pub use rational::{Rational, Scalar};
pub use rowspace::{DenseRowSpace, SparseVec};
pub use setpart::ordered_set_partitions_min2;
