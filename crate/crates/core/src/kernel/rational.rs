//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision rational with an inline fast path:
//! values whose numerator and denominator fit in an `i64` are stored unboxed
//! and combined with 128-bit intermediates, everything else falls back to
//! [`BigRational`]. The representation is canonical (lowest terms, positive
//! denominator, inline whenever the value fits), so structural equality and
//! hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Exact field elements the algebra code is generic over.
///
/// Implemented for [`Rational`] (the default everywhere) and for
/// [`BigRational`], which serves as an independent reference implementation
/// in tests. Floating point types are deliberately not supported.
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    fn from_ratio(numer: BigInt, denom: BigInt) -> Self;

    fn to_big_rational(&self) -> BigRational;

    /// `self - a * b`, the inner step of every elimination loop.
    fn sub_mul(&self, a: &Self, b: &Self) -> Self {
        self.clone() - a.clone() * b.clone()
    }

    fn is_integer(&self) -> bool {
        self.to_big_rational().is_integer()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(numer: BigInt, denom: BigInt) -> Self {
        BigRational::new(numer, denom)
    }

    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Lowest terms, `den > 0`.
    Small(i64, i64),
    /// Only used when the value does not fit `Small`.
    Big(Box<BigRational>),
}

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_u128(a: u128, b: u128) -> u128 {
    a.gcd(&b)
}

impl Rational {
    pub const fn from_integer_const(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_i128(numer as i128, denom as i128)
    }

    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        if n == 0 {
            return Rational(Repr::Small(0, 1));
        }
        let neg = (n < 0) != (d < 0);
        let (un, ud) = (n.unsigned_abs(), d.unsigned_abs());
        let g = gcd_u128(un, ud);
        let (un, ud) = (un / g, ud / g);
        if un <= i64::MAX as u128 && ud <= i64::MAX as u128 {
            let num = if neg { -(un as i64) } else { un as i64 };
            Rational(Repr::Small(num, ud as i64))
        } else {
            let mut bn = BigInt::from(un);
            if neg {
                bn = -bn;
            }
            Rational(Repr::Big(Box::new(BigRational::new_raw(bn, BigInt::from(ud)))))
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduced; only the inline check remains.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    fn big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// The value as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small(n, 1) => Some(n),
            _ => None,
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&self.0, &other.0) {
            let (n1, d1, n2, d2) = (*n1, *d1, *n2, *d2);
            if d1 == 1 && d2 == 1 {
                if let Some(s) = n1.checked_add(n2) {
                    return Rational(Repr::Small(s, 1));
                }
                return Self::from_i128(n1 as i128 + n2 as i128, 1);
            }
            if d1 == d2 {
                return Self::from_i128(n1 as i128 + n2 as i128, d1 as i128);
            }
            let a = (n1 as i128).checked_mul(d2 as i128);
            let b = (n2 as i128).checked_mul(d1 as i128);
            if let (Some(a), Some(b)) = (a, b) {
                if let Some(n) = a.checked_add(b) {
                    return Self::from_i128(n, d1 as i128 * d2 as i128);
                }
            }
        }
        Self::from_big(self.big() + other.big())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&self.0, &other.0) {
            let (n1, d1, n2, d2) = (*n1, *d1, *n2, *d2);
            if d1 == 1 && d2 == 1 {
                if let Some(p) = n1.checked_mul(n2) {
                    return Rational(Repr::Small(p, 1));
                }
                return Self::from_i128(n1 as i128 * n2 as i128, 1);
            }
            if n1 == 0 || n2 == 0 {
                return Self::zero();
            }
            let g1 = (n1 as i128).gcd(&(d2 as i128));
            let g2 = (n2 as i128).gcd(&(d1 as i128));
            let n = (n1 as i128 / g1) * (n2 as i128 / g2);
            let d = (d1 as i128 / g2) * (d2 as i128 / g1);
            return Self::from_i128(n, d);
        }
        Self::from_big(self.big() * other.big())
    }

    fn neg_ref(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Self::from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn div_ref(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        self.mul_ref(&other.recip())
    }
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }

    fn from_ratio(numer: BigInt, denom: BigInt) -> Self {
        Self::from_big(BigRational::new(numer, denom))
    }

    fn to_big_rational(&self) -> BigRational {
        self.big()
    }

    fn sub_mul(&self, a: &Self, b: &Self) -> Self {
        self.sub_ref(&a.mul_ref(b))
    }

    fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational(Repr::Small(v as i64, 1))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Self::from_big(v)
    }
}

impl From<Rational> for BigRational {
    fn from(v: Rational) -> Self {
        v.big()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$inner(&rhs)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                self.$inner(rhs)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$inner(&rhs)
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                self.$inner(rhs)
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                *self = self.$inner(&rhs);
            }
        }
        impl<'a> $assign_trait<&'a Rational> for Rational {
            fn $assign_method(&mut self, rhs: &'a Rational) {
                *self = self.$inner(rhs);
            }
        }
    };
}

forward_binop!(Add, add, add_ref, AddAssign, add_assign);
forward_binop!(Sub, sub, sub_ref, SubAssign, sub_assign);
forward_binop!(Mul, mul, mul_ref, MulAssign, mul_assign);
forward_binop!(Div, div, div_ref, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

// Truncated remainder, matching `num_rational::Ratio`.
impl Rem for Rational {
    type Output = Rational;
    fn rem(self, rhs: Rational) -> Rational {
        Self::from_big(self.big() % rhs.big())
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

impl Num for Rational {
    type FromStrRadixErr = ParseRationalError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        BigRational::from_str_radix(s, radix)
            .map(Self::from_big)
            .map_err(|_| ParseRationalError(s.to_string()))
    }
}

impl Signed for Rational {
    fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg_ref()
        } else {
            self.clone()
        }
    }

    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Self::zero()
        } else {
            self.sub_ref(other)
        }
    }

    fn signum(&self) -> Self {
        match self.cmp(&Self::zero()) {
            Ordering::Less => Self::from(-1i64),
            Ordering::Equal => Self::zero(),
            Ordering::Greater => Self::one(),
        }
    }

    fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }

    fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&self.0, &other.0) {
            return (*n1 as i128 * *d2 as i128).cmp(&(*n2 as i128 * *d1 as i128));
        }
        self.big().cmp(&other.big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ParseRationalError(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Self::from_big(BigRational::new(n, d)))
            }
            None => BigInt::from_str(s).map(Self::from).map_err(|_| err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(-3, -6), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, 5), Rational::zero());
        assert_eq!(q(0, -5).to_string(), "0");
        assert_eq!(q(6, 3).to_string(), "2");
    }

    #[test]
    fn overflow_promotes_to_big_and_back() {
        let big = Rational::from(i64::MAX) + Rational::from(i64::MAX);
        assert!(matches!(big.0, Repr::Big(_)));
        let back = big.clone() - Rational::from(i64::MAX);
        assert_eq!(back, Rational::from(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        let sq = Rational::from(i64::MIN) * Rational::from(i64::MIN);
        assert_eq!(sq.numer(), BigInt::from(i64::MIN) * BigInt::from(i64::MIN));
        assert_eq!(-Rational::from(i64::MIN), Rational::from(BigInt::from(i64::MIN).abs()));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), q(1, 2));
        assert_eq!("-7".parse::<Rational>().unwrap(), q(-7, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(q(-5, 3).to_string(), "-5/3");
    }

    fn arb_big() -> impl Strategy<Value = BigRational> {
        (any::<i64>(), 1i64..=i64::MAX, any::<i32>()).prop_map(|(n, d, k)| {
            let scale = BigInt::from(k);
            BigRational::new(BigInt::from(n) * &scale, BigInt::from(d))
        })
    }

    proptest! {
        // Every operation agrees with the BigRational reference.
        #[test]
        fn agrees_with_bigrational(a in arb_big(), b in arb_big()) {
            let (x, y) = (Rational::from(a.clone()), Rational::from(b.clone()));
            prop_assert_eq!((&x + &y).to_big_rational(), &a + &b);
            prop_assert_eq!((&x - &y).to_big_rational(), &a - &b);
            prop_assert_eq!((&x * &y).to_big_rational(), &a * &b);
            if !b.is_zero() {
                prop_assert_eq!((&x / &y).to_big_rational(), &a / &b);
            }
            prop_assert_eq!(x.cmp(&y), a.cmp(&b));
            prop_assert_eq!(Rational::from(a.clone()).to_string(), a.to_string());
        }

        #[test]
        fn small_field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let (x, y) = (q(a, b), q(c, d));
            prop_assert_eq!(&x + &y - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&x * &y / &y, x.clone());
            }
            prop_assert_eq!(&x * (&y + &x), &x * &y + &x * &x);
        }
    }
}
