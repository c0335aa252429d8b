use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{hook_dim, Partition};

/// Whose proper cocharacter is predicted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CocharTarget {
    A,
    /// The relatively free algebra `F_n(A)`, `n` even.
    FnA(usize),
}

impl fmt::Display for CocharTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocharTarget::A => write!(f, "A"),
            CocharTarget::FnA(n) => write!(f, "F_{n}(A)"),
        }
    }
}

/// One irreducible component: the generating family `u^(kind)_{m,i}`, its
/// partition and dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: u8,
    pub index: usize,
    pub partition: Partition,
    pub dim: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocharacter {
    pub components: Vec<Component>,
    pub total: u128,
}

fn hook_shape(first: usize, ones: usize) -> Vec<usize> {
    let mut v = vec![first];
    v.extend(std::iter::repeat_n(1, ones));
    v
}

fn two_shape(first: usize, ones: usize) -> Vec<usize> {
    let mut v = vec![first, 2];
    v.extend(std::iter::repeat_n(1, ones));
    v
}

/// The components of `Γ_m(A)`, or of `Γ_m(F_n(A))` after dropping the
/// families that vanish on `n` generators.
pub fn cocharacter_dims(m: usize, target: CocharTarget) -> Result<Cocharacter> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("m = {m}: cocharacters start at m = 2")));
    }
    if let CocharTarget::FnA(n) = target {
        if n < 2 || n % 2 == 1 {
            return Err(Error::InvalidParameter(format!("F_n(A) needs an even n ≥ 2, got {n}")));
        }
    }
    let cap = |extra: usize| match target {
        CocharTarget::A => usize::MAX,
        CocharTarget::FnA(n) => n + extra,
    };
    let mut shapes: Vec<(u8, usize, Vec<usize>)> = vec![(1, 1, vec![m - 1, 1])];
    for i in (2..=m.saturating_sub(2)).step_by(2).filter(|&i| i <= cap(0)) {
        shapes.push((2, i, two_shape(m - i, i - 2)));
    }
    for i in (3..m).step_by(2).filter(|&i| i <= cap(1)) {
        shapes.push((3, i, hook_shape(m - i + 1, i - 1)));
    }
    for i in (3..=m.saturating_sub(2)).step_by(2).filter(|&i| i <= cap(1)) {
        shapes.push((4, i, two_shape(m - i, i - 2)));
    }
    for i in (4..=m).step_by(2).filter(|&i| i <= cap(2)) {
        shapes.push((5, i, hook_shape(m - i + 1, i - 1)));
    }
    let mut components = Vec::with_capacity(shapes.len());
    for (kind, index, parts) in shapes {
        let partition = Partition::new(parts)?;
        let dim = hook_dim(&partition)?;
        components.push(Component {
            kind,
            index,
            partition,
            dim,
        });
    }
    let total = components.iter().map(|c| c.dim).sum();
    Ok(Cocharacter { components, total })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(c: &Cocharacter) -> Vec<(Vec<usize>, u128)> {
        let mut v: Vec<_> = c.components.iter().map(|c| (c.partition.parts().to_vec(), c.dim)).collect();
        v.sort();
        v
    }

    #[test]
    fn small_degrees() {
        assert_eq!(parts(&cocharacter_dims(2, CocharTarget::A).unwrap()), [(vec![1, 1], 1)]);
        assert_eq!(parts(&cocharacter_dims(3, CocharTarget::A).unwrap()), [(vec![2, 1], 2)]);
        let four = cocharacter_dims(4, CocharTarget::A).unwrap();
        assert_eq!(
            parts(&four),
            [(vec![1, 1, 1, 1], 1), (vec![2, 1, 1], 3), (vec![2, 2], 2), (vec![3, 1], 3)]
        );
        assert_eq!(four.total, 9);
    }

    #[test]
    fn totals() {
        let a: Vec<u128> = (2..=6).map(|m| cocharacter_dims(m, CocharTarget::A).unwrap().total).collect();
        assert_eq!(a, [1, 2, 9, 24, 65]);
        let f2: Vec<u128> = (2..=6).map(|m| cocharacter_dims(m, CocharTarget::FnA(2)).unwrap().total).collect();
        assert_eq!(f2, [1, 2, 9, 24, 50]);
        // larger n drops nothing this early
        for m in 2..=6 {
            assert_eq!(cocharacter_dims(m, CocharTarget::FnA(4)).unwrap(), cocharacter_dims(m, CocharTarget::A).unwrap());
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(cocharacter_dims(1, CocharTarget::A).is_err());
        assert!(cocharacter_dims(4, CocharTarget::FnA(3)).is_err());
        assert!(cocharacter_dims(4, CocharTarget::FnA(0)).is_err());
    }
}
