//! Sparse multivariate polynomials over an exact field.

mod binary;
mod monomial;
mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

pub use binary::{binary_gcd, binary_gcd_all, UniPoly};
pub use monomial::{mono_cmp, Monomial, MonomialOrder};
pub use parse::parse_poly;

/// Variable names, coefficient field, monomial order and variable weights.
/// Rings are value types and compare structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: Field,
    order: MonomialOrder,
    weights: Vec<u32>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    /// Ring in variables `x0..x(n-1)` with unit weights.
    pub fn new(nvars: usize, field: Field, order: MonomialOrder) -> RingRef {
        Self::with_prefix("x", nvars, field, order)
    }

    pub fn with_prefix(prefix: &str, nvars: usize, field: Field, order: MonomialOrder) -> RingRef {
        let names = (0..nvars).map(|i| format!("{prefix}{i}")).collect();
        Self::with_names(names, field, order)
    }

    pub fn with_names(names: Vec<String>, field: Field, order: MonomialOrder) -> RingRef {
        let weights = vec![1; names.len()];
        Arc::new(Ring {
            names,
            field,
            order,
            weights,
        })
    }

    pub fn with_weights(names: Vec<String>, field: Field, order: MonomialOrder, weights: Vec<u32>) -> RingRef {
        assert_eq!(names.len(), weights.len());
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Arc::new(Ring {
            names,
            field,
            order,
            weights,
        })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Same variables and field under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            order,
            ..self.clone()
        })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(&self.weights, a, b)
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.weights)
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial: terms sorted strictly descending in the ring order, no zero
/// coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: RingRef,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars());
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(ring: &RingRef, coeffs: &[Scalar]) -> Self {
        Self::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(ring.nvars(), i), c.clone())),
        )
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or_else(|| self.field().zero(), |(_, c)| c.clone())
    }

    /// Maximum weighted degree of a term (`None` for zero).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| self.ring.degree(m)).max()
    }

    /// Maximum standard total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Homogeneous with respect to the ring's weights (zero counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| self.ring.degree(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Sugar degree: the maximal weighted degree among the terms.
    pub fn sugar(&self) -> u32 {
        self.degree().unwrap_or(0)
    }

    /// Variables actually occurring.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponents()[i] > 0))
            .collect()
    }

    pub fn make_monic(&self) -> Poly {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("lead coefficient is nonzero")),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        // multiplying by a monomial preserves the order of terms
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, v)| (t.mul(m), v * c)).collect(),
        }
    }

    /// `self - c * m * g`, merged in one pass.
    pub fn sub_mul_term(&self, c: &Scalar, m: &Monomial, g: &Poly) -> Poly {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(t, v)| (t.mul(m), -(v * c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ring.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (mx, cx) = a.next().unwrap();
                        let (_, cy) = b.next().unwrap();
                        let s = cx + &cy;
                        if !s.is_zero() {
                            out.push((mx.clone(), s));
                        }
                    }
                },
            }
        }
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    fn merge_add(&self, other: &Poly) -> Poly {
        self.sub_mul_term(
            &(-self.field().one()),
            &Monomial::one(self.ring.nvars()),
            other,
        )
    }

    fn product(&self, other: &Poly) -> Poly {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly::from_terms(&self.ring, acc)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut acc = self.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = &t * x;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` (all in `target`) for variable `i`.
    pub fn compose(&self, target: &RingRef, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc = Poly::zero(target);
        let mut powers: HashMap<(usize, u16), Poly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as u32))
                    .clone();
                t = &t * &p;
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Re-sorts the terms for another ring with the same variable count and
    /// field (typically a different order).
    pub fn to_ring(&self, ring: &RingRef) -> Poly {
        assert_eq!(ring.nvars(), self.ring.nvars());
        assert_eq!(ring.field(), self.ring.field());
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Moves the polynomial into `ring`, sending variable `i` to `var_map[i]`.
    pub fn embed(&self, ring: &RingRef, var_map: &[usize]) -> Poly {
        assert_eq!(var_map.len(), self.ring.nvars());
        Poly::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; ring.nvars()];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Restriction to a ring on a subset of the variables; `var_map[i]` is
    /// the new index of old variable `i`, or `None` if the variable must not
    /// occur.
    pub fn restrict(&self, ring: &RingRef, var_map: &[Option<usize>]) -> Option<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; ring.nvars()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                e[var_map[i]?] += x;
            }
            terms.push((Monomial::new(e), c.clone()));
        }
        Some(Poly::from_terms(ring, terms))
    }

    /// Sets the variables in `fixed` to one (dehomogenization in one or
    /// more variables), staying in the same ring.
    pub fn set_to_one(&self, vars: &[usize]) -> Poly {
        Poly::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                for &v in vars {
                    e[v] = 0;
                }
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Partial derivative with respect to variable `v`.
    pub fn partial(&self, v: usize) -> Poly {
        let field = self.field();
        Poly::from_terms(
            &self.ring,
            self.terms.iter().filter(|(m, _)| m.exponents()[v] > 0).map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                let k = e[v];
                e[v] -= 1;
                (Monomial::new(e), c * &field.from_i64(k as i64))
            }),
        )
    }

    /// Homogenizes with respect to variable `h` (standard grading).
    pub fn homogenize(&self, h: usize) -> Poly {
        let d = self.total_degree().unwrap_or(0);
        Poly::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e[h] += (d - m.degree()) as u16;
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Exact division by a single monomial power of variable `v`; `None`
    /// if some term is not divisible.
    pub fn divide_by_var_power(&self, v: usize, e: u16) -> Option<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut ex = m.exponents().to_vec();
            ex[v] = ex[v].checked_sub(e)?;
            terms.push((Monomial::new(ex), c.clone()));
        }
        Some(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Exact quotient `self / divisor` by multivariate long division; `None`
    /// if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.terms.first()?;
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = m.div(lm)?;
            let qc = &c * &lc_inv;
            rem = rem.sub_mul_term(&qc, &q, divisor);
            quot.push((q, qc));
        }
        Some(Poly::from_terms(&self.ring, quot))
    }
}

fn check_same(f: &Poly, g: &Poly) -> Result<()> {
    if same_ring(&f.ring, &g.ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Operand for [`poly_arith`].
pub enum PolyOperand<'a> {
    Poly(&'a Poly),
    Scalar(&'a Scalar),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Scale,
}

/// Checked polynomial arithmetic.
pub fn poly_arith(op: PolyOp, f: &Poly, g: PolyOperand<'_>) -> Result<Poly> {
    match (op, g) {
        (PolyOp::Scale, PolyOperand::Scalar(c)) => {
            if c.field() != f.field() {
                return Err(Error::FieldMismatch(
                    f.field().to_string(),
                    c.field().to_string(),
                ));
            }
            Ok(f.scale(c))
        }
        (PolyOp::Scale, PolyOperand::Poly(_)) => Err(Error::Parse("scale expects a scalar".into())),
        (_, PolyOperand::Scalar(c)) => {
            let g = Poly::constant(f.ring(), c.clone());
            poly_arith(op, f, PolyOperand::Poly(&g))
        }
        (op, PolyOperand::Poly(g)) => {
            check_same(f, g)?;
            Ok(match op {
                PolyOp::Add => f + g,
                PolyOp::Sub => f - g,
                PolyOp::Mul => f * g,
                PolyOp::Scale => unreachable!(),
            })
        }
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        self.merge_add(rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        self.sub_mul_term(&self.field().one(), &Monomial::one(self.ring.nvars()), rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        self.product(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(&(-self.field().one()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names[i].clone()),
                    _ => factors.push(format!("{}^{e}", self.ring.names[i])),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Canonical basis (reduced echelon form) of the linear span of `polys`,
/// ordered by descending leading monomial. Empty when all are zero.
pub fn span_basis(ring: &RingRef, polys: &[Poly]) -> Vec<Poly> {
    let mut monos: Vec<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms.iter().map(|(m, _)| m.clone()))
        .collect();
    monos.sort_by(|a, b| ring.cmp(b, a));
    monos.dedup();
    if monos.is_empty() {
        return Vec::new();
    }
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat = Matrix::zeros(ring.field(), polys.len(), monos.len());
    for (r, p) in polys.iter().enumerate() {
        for (m, c) in &p.terms {
            mat.set(r, index[m], c.clone());
        }
    }
    mat.row_space_basis()
        .into_iter()
        .map(|row| {
            Poly::from_terms(
                ring,
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (monos[i].clone(), c)),
            )
        })
        .collect()
}

/// Dimension of the linear span of `polys`.
pub fn span_dim(ring: &RingRef, polys: &[Poly]) -> usize {
    span_basis(ring, polys).len()
}

/// All monomials of standard degree `d` in `n` variables, descending in
/// lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u16, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(n, d as u16, &mut Vec::new(), &mut out);
    out
}
