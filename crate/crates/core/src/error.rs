use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation of 1..n: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("not a partition (parts must be positive and weakly decreasing): {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("hook_dim of the empty partition")]
    EmptyPartition,
    #[error("partition of weight {0} is too large for exact hook dimension")]
    PartitionTooLarge(usize),
    #[error("vector width {found} does not match row space width {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("variable index 0 is not allowed; variables are x1, x2, ...")]
    ZeroVariable,
    #[error("no assignment given for variable x{0}")]
    MissingAssignment(u32),
    #[error("a commutator needs at least 2 arguments, got {0}")]
    CommutatorArity(usize),
    #[error("invalid family f({kind}): {reason}")]
    InvalidFamily { kind: u8, reason: String },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not multilinear in x1..x{0}")]
    NotMultilinear(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("Grassmann ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("Grassmann rank {0} exceeds the supported maximum of 64")]
    RankTooLarge(usize),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("element violates the constraints of {algebra}: {detail}")]
    ProfileViolation { algebra: String, detail: String },
    #[error("tuple has {found} entries, polynomial has degree {expected}")]
    TupleLength { expected: usize, found: usize },
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
