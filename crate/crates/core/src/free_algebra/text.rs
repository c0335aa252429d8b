//! Text format for polynomials.
//!
//! ```text
//! poly   := term (('+'|'-') term)*      (a leading sign is allowed)
//! term   := [coeff '*'] factor ('*' factor)* | coeff
//! coeff  := integer | integer '/' integer
//! factor := var | comm
//! comm   := '[' poly (',' poly)+ ']'
//! var    := 'x' positive-integer
//! ```
//!
//! Whitespace is ignored everywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::free_algebra::poly::{commutator, NCPoly, Word};
use crate::kernel::Scalar;

pub fn parse<S: Scalar>(text: &str) -> Result<NCPoly<S>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

/// Canonical rendering: words in lexicographic order, unit coefficients
/// omitted, `0` for the zero polynomial.
pub fn format<S: Scalar>(f: &NCPoly<S>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (w, c)) in f.terms().enumerate() {
        let q = c.to_big_rational();
        let neg = q.is_negative();
        let abs = q.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let letters: Vec<String> = w.letters().iter().map(|l| format!("x{l}")).collect();
        if w.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&letters.join("*"));
        } else {
            out.push_str(&format!("{}*{}", abs, letters.join("*")));
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly<S: Scalar>(&mut self) -> Result<NCPoly<S>> {
        let mut acc = NCPoly::zero();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term::<S>()?;
            acc = if negative { acc - t } else { acc + t };
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<NCPoly<S>> {
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff::<S>()?;
                if !self.eat(b'*') {
                    return Ok(NCPoly::constant(coeff));
                }
                NCPoly::constant(coeff)
            }
            _ => NCPoly::one(),
        };
        acc = &acc * &self.factor::<S>()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor::<S>()?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("nonempty ascii digits"))
    }

    fn coeff<S: Scalar>(&mut self) -> Result<S> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            let at = self.pos;
            let denom = self.integer()?;
            if denom.is_zero() {
                return Err(Error::Parse {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(S::from_ratio(numer, denom));
        }
        Ok(S::from_ratio(numer, BigInt::one()))
    }

    fn factor<S: Scalar>(&mut self) -> Result<NCPoly<S>> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let at = self.pos;
                let idx = self.integer()?;
                let idx: u32 = idx
                    .try_into()
                    .map_err(|_| Error::Parse { pos: at, msg: "variable index too large".into() })?;
                if idx == 0 {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "variable index 0 is not allowed".into(),
                    });
                }
                Ok(NCPoly::monomial(Word::from_letters(vec![idx]), S::one()))
            }
            Some(b'[') => {
                self.pos += 1;
                let mut args = vec![self.poly::<S>()?];
                while self.eat(b',') {
                    args.push(self.poly::<S>()?);
                }
                if !self.eat(b']') {
                    return Err(self.error("expected ',' or ']'"));
                }
                if args.len() < 2 {
                    return Err(self.error("a commutator needs at least 2 entries"));
                }
                commutator(&args)
            }
            _ => Err(self.error("expected a variable or '['")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::poly::var_commutator;
    use crate::kernel::Rational;
    use proptest::prelude::*;

    type P = NCPoly<Rational>;

    fn p(s: &str) -> P {
        parse(s).unwrap()
    }

    #[test]
    fn grammar_examples() {
        let t = &var_commutator::<Rational>(&[1, 2]).unwrap() * &var_commutator(&[3, 4, 5]).unwrap();
        assert_eq!(p("[x1,x2]*[x3,x4,x5]"), t);
        assert_eq!(p("x1*x2 - x2*x1"), p("[x1,x2]"));
        assert_eq!(p("2*[x1,x2] + [x2,x1]"), p("[x1,x2]"));
        assert_eq!(p(" - 1/2 * x3 + 3"), P::constant(Rational::from(3)) - P::var(3).scale(&Rational::new(1, 2)));
        assert_eq!(p("[x1 + x2, x3]"), &p("[x1,x3]") + &p("[x2,x3]"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse::<Rational>("x0"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse::<Rational>("x1 +"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse::<Rational>("[x1]"), Err(Error::Parse { .. })));
        assert!(matches!(parse::<Rational>("x1 x2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse::<Rational>("1/0*x1"), Err(Error::Parse { pos: 2, .. })));
        assert!(parse::<Rational>("y1").is_err());
    }

    #[test]
    fn canonical_format() {
        assert_eq!(format(&p("[x1,x2]")), "x1*x2 - x2*x1");
        assert_eq!(format(&p("-2*x2 + 1/3*x1*x1 + 5")), "5 + 1/3*x1*x1 - 2*x2");
        assert_eq!(format(&P::zero()), "0");
        assert_eq!(format(&p("-x1")), "-x1");
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(
            (prop::collection::vec(1u32..=4, 0..4), -5i64..=5, 1i64..=3),
            0..5,
        )
        .prop_map(|terms| {
            P::from_terms(
                terms
                    .into_iter()
                    .map(|(l, n, d)| (Word::new(l).unwrap(), Rational::new(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_format(f in arb_poly()) {
            prop_assert_eq!(parse::<Rational>(&format(&f)).unwrap(), f);
        }
    }
}
