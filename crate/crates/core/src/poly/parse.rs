//! Parser for the human-readable syntax `3/2*x0^2*x1 - x2^3`.

use std::iter::Peekable;
use std::str::Chars;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{Poly, RingRef};
use crate::error::{Error, Result};

/// Parses a polynomial over `ring`. Variables are referred to by the ring's
/// names; parentheses and integer powers of sub-expressions are accepted.
pub fn parse_poly(ring: &RingRef, input: &str) -> Result<Poly> {
    let mut p = Parser {
        ring,
        chars: input.chars().peekable(),
    };
    let poly = p.sum()?;
    p.skip_ws();
    match p.chars.next() {
        None => Ok(poly),
        Some(c) => Err(Error::Parse(format!("unexpected {c:?} in {input:?}"))),
    }
}

struct Parser<'a> {
    ring: &'a RingRef,
    chars: Peekable<Chars<'a>>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.ring);
        let mut sign = match self.peek() {
            Some('-') => {
                self.chars.next();
                -1
            }
            Some('+') => {
                self.chars.next();
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.chars.next();
        }
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.chars.next();
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.chars.next();
            self.skip_ws();
            let e = self.digits()?;
            let e: u32 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String> {
        let mut s = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if s.is_empty() {
            return Err(Error::Parse("expected digits".into()));
        }
        Ok(s)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                self.chars.next();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().expect("digits");
                let mut den = BigInt::one();
                if self.peek() == Some('/') {
                    self.chars.next();
                    self.skip_ws();
                    den = self.digits()?.parse().expect("digits");
                    if den == BigInt::from(0) {
                        return Err(Error::DivisionByZero);
                    }
                }
                let c = self.ring.field().from_rational(&BigRational::new(num, den))?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                let idx = self
                    .ring
                    .names()
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                Ok(Poly::var(self.ring, idx))
            }
            other => Err(Error::Parse(format!("unexpected {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, Ring};
    use crate::scalar::Field;

    #[test]
    fn parses_nested_expressions() {
        let r = Ring::new(2, Field::Rational, MonomialOrder::Grevlex);
        let f = parse_poly(&r, "(x0 + x1)^2 - 2*x0*x1").unwrap();
        assert_eq!(f, parse_poly(&r, "x0^2 + x1^2").unwrap());
        assert!(parse_poly(&r, "x2").is_err());
        assert!(parse_poly(&r, "x0 +").is_err());
        assert!(parse_poly(&r, "(x0").is_err());
        assert_eq!(parse_poly(&r, "1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn modular_literals() {
        let r = Ring::new(1, Field::Prime(7), MonomialOrder::Grevlex);
        let f = parse_poly(&r, "1/2*x0").unwrap();
        assert_eq!(f.to_string(), "4*x0");
        assert!(matches!(parse_poly(&r, "1/7"), Err(Error::BadReduction(..))));
    }
}
