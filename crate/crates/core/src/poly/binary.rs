//! Univariate polynomials and gcds of binary forms.

use super::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Dense univariate polynomial, coefficients from low to high degree, with
/// no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        UniPoly::new(field, Vec::new())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                UniPoly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, other: &UniPoly) -> (UniPoly, UniPoly) {
        let d = other.degree().expect("division by the zero polynomial");
        let inv = other.coeffs[d].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let shift = rem.len() - 1 - d;
            let c = rem.last().unwrap() * &inv;
            for (i, oc) in other.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * oc);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(self.field, quot), UniPoly::new(self.field, rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    /// `f / gcd(f, f')`, monic. Exact in characteristic zero and whenever
    /// the degree is below the characteristic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

fn check_binary(f: &Poly) -> Result<()> {
    if f.ring().nvars() != 2 || !f.ring().has_unit_weights() {
        return Err(Error::NotBinaryForm(format!(
            "{f} lives in a ring with {} variables",
            f.ring().nvars()
        )));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotBinaryForm(format!("{f} is not homogeneous")));
    }
    Ok(())
}

/// Dehomogenizes at `x0 = 1`: returns the power of `x0` dividing `f` and
/// `f(1, x1)` as a univariate polynomial in `x1`.
fn dehomogenize(f: &Poly) -> (u32, UniPoly) {
    let field = f.field();
    let d = f.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![field.zero(); d + 1];
    for (m, c) in f.terms() {
        coeffs[m.exponents()[1] as usize] = c.clone();
    }
    let u = UniPoly::new(field, coeffs);
    let x0_power = d - u.degree().unwrap_or(0);
    (x0_power as u32, u)
}

/// Monic gcd of two binary forms in `x0, x1`; `gcd(f, 0)` is `f` made monic.
pub fn binary_gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    check_binary(f)?;
    check_binary(g)?;
    if !super::same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(g.make_monic());
    }
    if g.is_zero() {
        return Ok(f.make_monic());
    }
    let (af, uf) = dehomogenize(f);
    let (ag, ug) = dehomogenize(g);
    let u = uf.gcd(&ug);
    let a = af.min(ag);
    let du = u.degree().unwrap_or(0) as u32;
    let ring = f.ring();
    let terms = u.coeffs().iter().enumerate().map(|(i, c)| {
        let i = i as u32;
        (
            Monomial::new(vec![(a + du - i) as u16, i as u16]),
            c.clone(),
        )
    });
    Ok(Poly::from_terms(ring, terms).make_monic())
}

/// Gcd of a whole family of binary forms (zero forms are skipped).
pub fn binary_gcd_all<'a>(forms: impl IntoIterator<Item = &'a Poly>) -> Result<Option<Poly>> {
    let mut acc: Option<Poly> = None;
    for f in forms {
        if f.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => binary_gcd(f, f)?,
            Some(g) => binary_gcd(&g, f)?,
        });
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, Ring, RingRef};
    use proptest::prelude::*;

    fn ring() -> RingRef {
        Ring::new(2, Field::Rational, MonomialOrder::Grevlex)
    }

    fn p(s: &str) -> Poly {
        parse_poly(&ring(), s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(binary_gcd(&p("x0^2*x1"), &p("x0*x1^2")).unwrap(), p("x0*x1"));
        assert_eq!(binary_gcd(&p("x0^2"), &p("(x0 + x1)^2")).unwrap(), p("1"));
        assert_eq!(
            binary_gcd(&p("(x0 + x1)^3"), &p("(x0 + x1)^2*x0")).unwrap(),
            p("(x0 + x1)^2")
        );
        assert_eq!(binary_gcd(&p("3*x0*x1"), &p("0")).unwrap(), p("x0*x1"));
    }

    #[test]
    fn rejects_non_binary_input() {
        let r3 = Ring::new(3, Field::Rational, MonomialOrder::Grevlex);
        let f = parse_poly(&r3, "x0").unwrap();
        assert!(matches!(binary_gcd(&f, &f), Err(Error::NotBinaryForm(_))));
        assert!(matches!(binary_gcd(&p("x0 + 1"), &p("x0")), Err(Error::NotBinaryForm(_))));
    }

    #[test]
    fn squarefree() {
        let f = Field::Rational;
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let u = UniPoly::new(f, vec![f.from_i64(2), f.from_i64(-3), f.zero(), f.one()]);
        let s = u.squarefree_part();
        // (x-1)(x+2) = x^2 + x - 2
        assert_eq!(s, UniPoly::new(f, vec![f.from_i64(-2), f.one(), f.one()]));
    }

    fn linear_factor() -> impl Strategy<Value = (i64, i64)> {
        (-3i64..4, -3i64..4).prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
    }

    proptest! {
        #[test]
        fn gcd_divides_and_is_divisible(
            common in proptest::collection::vec(linear_factor(), 0..3),
            fa in proptest::collection::vec(linear_factor(), 0..3),
            fb in proptest::collection::vec(linear_factor(), 0..3),
        ) {
            let r = ring();
            let lin = |(a, b): (i64, i64)| {
                parse_poly(&r, &format!("{a}*x0 + {b}*x1").replace("+ -", "- ")).unwrap()
            };
            let prod = |fs: &[(i64, i64)]| fs.iter().fold(Poly::one(&r), |acc, &l| &acc * &lin(l));
            let c = prod(&common);
            let f = &c * &prod(&fa);
            let g = &c * &prod(&fb);
            let h = binary_gcd(&f, &g).unwrap();
            prop_assert!(f.exact_div(&h).is_some());
            prop_assert!(g.exact_div(&h).is_some());
            prop_assert!(h.exact_div(&c).is_some());
        }
    }
}
