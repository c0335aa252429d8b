//! Small polynomials used to cross-check evaluation strategies.

/// Homogeneous polynomials of degree at most 4, some identities of `A`,
/// some not, a few not multilinear.
pub const SMALL: &[&str] = &[
    "[x1,x2]",
    "x1*x2",
    "[x1,x2,x3]",
    "[x1,x2]*[x3,x4]",
    "[x1,x2]*[x3,x4] + [x1,x3]*[x2,x4]",
    "[x1,x2]*[x1,x3]",
    "[[x1,x2],[x3,x4]]",
    "[x1,x2,x3,x4]",
    "[x1,x2]*x3*x4 - x3*[x1,x2]*x4",
    "[x1,x2]*[x3,x1]",
    "[x1,x2,x2]",
    "x1*[x2,x3,x4]",
    "[x1,x2]*x3 - x3*[x1,x2]",
    "[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2]",
    "[x1,x2]*[x3,x4] - [x3,x4]*[x1,x2]",
    "[x2,x1,x1]*x3 + x1*[x2,x3,x1]",
    "[x1,x2]*[x1,x2]",
    "x1*x1*x2 - x2*x1*x1",
];
