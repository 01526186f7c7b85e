//! Matrix pencils: Kronecker blocks, base-locus degrees through binary gcds,
//! and the classification of their collineation varieties as rational
//! normal curves.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::label::CollineationLabel;
use crate::poly::{binary_gcd_all, monomials_of_degree, span_dim, MonomialOrder, Poly, Ring};
use crate::scalar::{Field, Scalar};
use crate::tensor::{LinearFormMatrix, Tensor3};

/// One Kronecker block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PencilBlock {
    /// `h × (h+1)`, `x0` on the diagonal and `x1` on the superdiagonal.
    L(usize),
    /// `(h+1) × h`, the transpose of `L(h)`.
    R(usize),
    /// `h × h` Jordan block: `x0 + λ x1` on the diagonal, `x1` above it.
    J(usize, Scalar),
}

impl PencilBlock {
    pub fn shape(&self) -> (usize, usize) {
        match *self {
            PencilBlock::L(h) => (h, h + 1),
            PencilBlock::R(h) => (h + 1, h),
            PencilBlock::J(h, _) => (h, h),
        }
    }
}

impl fmt::Display for PencilBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PencilBlock::L(h) => write!(f, "L{h}"),
            PencilBlock::R(h) => write!(f, "R{h}"),
            PencilBlock::J(h, l) => write!(f, "J{h}({l})"),
        }
    }
}

/// A block-diagonal pencil, written `L2+J3(1)+R1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilBlockSpec {
    pub blocks: Vec<PencilBlock>,
}

impl PencilBlockSpec {
    pub fn shape(&self) -> (usize, usize) {
        self.blocks
            .iter()
            .map(PencilBlock::shape)
            .fold((0, 0), |(r, c), (a, b)| (r + a, c + b))
    }

    /// Parses the block syntax with eigenvalues read in `field`.
    pub fn parse(s: &str, field: Field) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in s.split('+').map(str::trim) {
            if part.is_empty() {
                return Err(Error::Parse(format!("empty block in {s:?}")));
            }
            let bad = || Error::Parse(format!("bad block {part:?}"));
            let (kind, rest) = part.split_at(1);
            let (size, lambda) = match rest.find('(') {
                Some(open) => {
                    let close = rest.strip_suffix(')').ok_or_else(bad)?;
                    (&rest[..open], Some(&close[open + 1..]))
                }
                None => (rest, None),
            };
            let h: usize = size.trim().parse().map_err(|_| bad())?;
            if h == 0 {
                return Err(bad());
            }
            blocks.push(match (kind, lambda) {
                ("L", None) => PencilBlock::L(h),
                ("R", None) => PencilBlock::R(h),
                ("J", Some(l)) => PencilBlock::J(h, field.parse_scalar(l)?),
                _ => return Err(bad()),
            });
        }
        Ok(PencilBlockSpec { blocks })
    }
}

impl fmt::Display for PencilBlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for PencilBlockSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PencilBlockSpec::parse(s, Field::Rational)
    }
}

/// Assembles the block-diagonal pencil as a `2 × rows × cols` tensor.
pub fn build_pencil(spec: &PencilBlockSpec, field: Field) -> Result<Tensor3> {
    if spec.blocks.is_empty() {
        return Err(Error::EmptySpec);
    }
    let (rows, cols) = spec.shape();
    let mut t = Tensor3::zeros([2, rows, cols], field);
    let one = field.one();
    let (mut r0, mut c0) = (0, 0);
    for b in &spec.blocks {
        match b {
            PencilBlock::L(h) => {
                for i in 0..*h {
                    t.set(0, r0 + i, c0 + i, one.clone());
                    t.set(1, r0 + i, c0 + i + 1, one.clone());
                }
            }
            PencilBlock::R(h) => {
                for i in 0..*h {
                    t.set(0, r0 + i, c0 + i, one.clone());
                    t.set(1, r0 + i + 1, c0 + i, one.clone());
                }
            }
            PencilBlock::J(h, lambda) => {
                let lambda = match lambda {
                    Scalar::Rational(q) => field.from_rational(q)?,
                    other => other.clone(),
                };
                for i in 0..*h {
                    t.set(0, r0 + i, c0 + i, one.clone());
                    t.set(1, r0 + i, c0 + i, lambda.clone());
                    if i + 1 < *h {
                        t.set(1, r0 + i, c0 + i + 1, one.clone());
                    }
                }
            }
        }
        let (a, b) = b.shape();
        r0 += a;
        c0 += b;
    }
    Ok(t)
}

/// `1 ≤ k ≤ min(rows, cols)`, strictly below when the pencil is square.
pub fn is_admissible(rows: usize, cols: usize, k: usize) -> bool {
    let (a, b) = (rows.min(cols), rows.max(cols));
    k >= 1 && k <= a && (a < b || k < a)
}

/// Admissible minor sizes for a `rows × cols` pencil.
pub fn admissible_ks(rows: usize, cols: usize) -> Vec<usize> {
    (1..=rows.min(cols)).filter(|&k| is_admissible(rows, cols, k)).collect()
}

fn pencil_matrix(t: &Tensor3) -> Result<LinearFormMatrix> {
    if t.dims()[0] != 2 {
        return Err(Error::OutOfRange(format!(
            "a pencil has first dimension 2, got {:?}",
            t.dims()
        )));
    }
    t.linear_matrix(1)
}

/// Degree of the gcd of all `k × k` minors, which is the degree of the
/// base locus.
pub fn pencil_base_degree(t: &Tensor3, k: usize) -> Result<u32> {
    let m = pencil_matrix(t)?;
    let minors = m.minor_list(k)?;
    match binary_gcd_all(&minors)? {
        None => Err(Error::UndefinedCollineation(format!("all {k}x{k} minors vanish"))),
        Some(g) => Ok(g.degree().unwrap_or(0)),
    }
}

/// Outcome of [`classify_pencil`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PencilClassification {
    pub label: CollineationLabel,
    /// Degree of the base locus; absent when undefined.
    pub p: Option<u32>,
    pub k: usize,
    pub shape: (usize, usize),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// The `k`-th collineation variety of a pencil: `RNC(k - p)`, or a point
/// when `p = k`.
pub fn classify_pencil(t: &Tensor3, k: usize) -> Result<PencilClassification> {
    let m = pencil_matrix(t)?;
    let shape = m.shape();
    let undefined = |reason: String| PencilClassification {
        label: CollineationLabel::Undefined(reason.clone()),
        p: None,
        k,
        shape,
        reason: Some(reason),
    };
    // k = n2 = n3 is not admissible, but the single minor
    // still maps to a point whenever it is nonzero
    let full_square = shape.0 == shape.1 && k == shape.0;
    if !is_admissible(shape.0, shape.1, k) && !full_square {
        return Ok(undefined(format!("k = {k} is not admissible for a {}x{} pencil", shape.0, shape.1)));
    }
    match pencil_base_degree(t, k) {
        Ok(p) => {
            let p_k = p as usize;
            let label = if p_k >= k {
                CollineationLabel::Point
            } else {
                CollineationLabel::rnc((k - p_k) as u32)
            };
            Ok(PencilClassification {
                label,
                p: Some(p),
                k,
                shape,
                reason: full_square.then(|| "single maximal minor".to_string()),
            })
        }
        Err(Error::UndefinedCollineation(r)) => Ok(undefined(r)),
        Err(e) => Err(e),
    }
}

/// Compares the degree-`r` pieces of `I(M, r)` and its saturation.
pub fn check_saturation_property(m: &LinearFormMatrix, r: usize) -> Result<bool> {
    let ring = m.ring();
    if ring.nvars() != 2 {
        return Err(Error::NotBinaryForm(format!(
            "matrix entries live in {} variables",
            ring.nvars()
        )));
    }
    let (ideal, minors) = m.minor_ideal(r)?;
    if minors.iter().all(Poly::is_zero) {
        return Ok(true);
    }
    let sat = ideal.saturate_irrelevant()?;
    let lhs = span_dim(ring, &minors);
    let rhs = span_dim(ring, &graded_piece(&sat, r as u32)?);
    Ok(lhs == rhs)
}

/// Spanning set of the degree-`d` part of a homogeneous ideal.
fn graded_piece(i: &Ideal, d: u32) -> Result<Vec<Poly>> {
    let ring = i.ring();
    let n = ring.nvars();
    let one = ring.field().one();
    let mut out = Vec::new();
    for g in i.groebner()? {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for m in monomials_of_degree(n, d - e) {
            out.push(g.mul_term(&m, &one));
        }
    }
    Ok(out)
}

/// Dimensions of the components of the closure of pencils whose `k`-th
/// collineation variety is a rational normal curve of degree `s`.
pub fn stratum_dimension(n2: u64, n3: u64, k: u64, s: u64) -> Result<Vec<u64>> {
    if !(s <= k && k <= n2 && n2 <= n3) || !(n2 < n3 || k < n2) {
        return Err(Error::OutOfRange(format!(
            "need s <= k <= n2 <= n3 and (n2 < n3 or k < n2), got ({n2},{n3},{k},{s})"
        )));
    }
    let one_point = |k: u64| n2 * n3 + (k - 1) * (n2 + n3 - (k - 1));
    match k - s {
        0 => Ok(vec![2 * n2 * n3 - 1]),
        1 => Ok(vec![one_point(k)]),
        2 => {
            let two_points = 2 * (k - 1) * (n2 + n3 - (k - 1));
            if k >= 3 {
                Ok(vec![two_points, one_point(k - 1)])
            } else {
                Ok(vec![two_points])
            }
        }
        d => Err(Error::OutOfRange(format!("no dimension formula for k - s = {d}"))),
    }
}

/// A random block pencil with at most `max_rows × max_cols` entries.
pub fn random_block_spec<R: Rng>(rng: &mut R, max_rows: usize, max_cols: usize) -> PencilBlockSpec {
    loop {
        let mut blocks = Vec::new();
        let (mut rows, mut cols) = (0, 0);
        let target = rng.gen_range(1..=4);
        for _ in 0..12 {
            if blocks.len() == target {
                break;
            }
            let h = rng.gen_range(1..=3);
            let b = match rng.gen_range(0..4) {
                0 => PencilBlock::L(h),
                1 => PencilBlock::R(h),
                _ => PencilBlock::J(h, Field::Rational.from_i64(rng.gen_range(-2..=2))),
            };
            let (a, c) = b.shape();
            if rows + a <= max_rows && cols + c <= max_cols {
                rows += a;
                cols += c;
                blocks.push(b);
            }
        }
        if !blocks.is_empty() && !admissible_ks(rows, cols).is_empty() {
            return PencilBlockSpec { blocks };
        }
    }
}

fn random_invertible<R: Rng>(rng: &mut R, n: usize, field: Field) -> Vec<Vec<Scalar>> {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect())
            .collect();
        if crate::linalg::Matrix::from_rows(field, rows.clone()).rank() == n {
            return rows;
        }
    }
}

/// `P · M · Q` for random invertible `P`, `Q`; the classification is
/// unchanged.
pub fn scramble<R: Rng>(t: &Tensor3, rng: &mut R) -> Tensor3 {
    let [n1, n2, n3] = t.dims();
    let field = t.field();
    let p = random_invertible(rng, n2, field);
    let q = random_invertible(rng, n3, field);
    let mut out = Tensor3::zeros(t.dims(), field);
    for i in 0..n1 {
        // (P M_i)[j][b]
        let mut pm = vec![vec![field.zero(); n3]; n2];
        for (j, row) in pm.iter_mut().enumerate() {
            for (a, pa) in p[j].iter().enumerate() {
                if pa.is_zero() {
                    continue;
                }
                for (b, cell) in row.iter_mut().enumerate() {
                    let v = t.get(i, a, b);
                    if !v.is_zero() {
                        *cell = &*cell + &(pa * v);
                    }
                }
            }
        }
        for (j, row) in pm.iter().enumerate() {
            for k in 0..n3 {
                let mut acc = field.zero();
                for (b, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        acc = &acc + &(v * &q[b][k]);
                    }
                }
                out.set(i, j, k, acc);
            }
        }
    }
    out
}

/// The ring of binary forms used for pencils.
pub fn binary_ring(field: Field) -> crate::poly::RingRef {
    Ring::new(2, field, MonomialOrder::Grevlex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> Field {
        Field::Rational
    }

    fn pencil(s: &str) -> Tensor3 {
        build_pencil(&s.parse().unwrap(), q()).unwrap()
    }

    #[test]
    fn blocks_and_dsl() {
        let spec: PencilBlockSpec = "L2+J3(1/2)+R1".parse().unwrap();
        assert_eq!(spec.shape(), (2 + 3 + 2, 3 + 3 + 1));
        assert_eq!(spec.to_string(), "L2+J3(1/2)+R1");
        assert!("L0".parse::<PencilBlockSpec>().is_err());
        assert!("J2".parse::<PencilBlockSpec>().is_err());
        assert!("X1".parse::<PencilBlockSpec>().is_err());
        assert_eq!(build_pencil(&PencilBlockSpec { blocks: vec![] }, q()).err(), Some(Error::EmptySpec));
    }

    #[test]
    fn block_matrices() {
        assert_eq!(pencil("J1(5)").linear_matrix(1).unwrap().to_string(), "[x0 + 5*x1]\n");
        assert_eq!(pencil("L2").linear_matrix(1).unwrap().to_string(), "[x0, x1, 0]\n[0, x0, x1]\n");
        assert_eq!(pencil("R1").linear_matrix(1).unwrap().to_string(), "[x0]\n[x1]\n");
        assert_eq!(pencil("J2(0)").linear_matrix(1).unwrap().to_string(), "[x0, x1]\n[0, x0]\n");
        assert_eq!(pencil("L1+R1").dims(), [2, 3, 3]);
    }

    #[test]
    fn base_degrees() {
        assert_eq!(pencil_base_degree(&pencil("L2"), 2).unwrap(), 0);
        assert_eq!(pencil_base_degree(&pencil("J2(0)"), 2).unwrap(), 2);
        assert_eq!(pencil_base_degree(&pencil("J2(0)+J1(1)"), 2).unwrap(), 0);
    }

    #[test]
    fn classification_examples() {
        let generic = pencil("J1(0)+J1(1)+J1(-1)");
        assert_eq!(classify_pencil(&generic, 2).unwrap().label, CollineationLabel::Rnc(2));
        let j3 = pencil("J3(0)");
        assert_eq!(classify_pencil(&j3, 3).unwrap().label, CollineationLabel::Point);
        assert_eq!(classify_pencil(&j3, 3).unwrap().p, Some(3));
        assert!(classify_pencil(&pencil("J2(0)+J1(1)"), 4).unwrap().label.is_undefined());
        let singular = pencil("J1(0)+L1+R1");
        assert!(classify_pencil(&singular, 4).unwrap().label.is_undefined());
        // a rank-one member: J2(0) has x1 = 0 member of rank 1
        let c = classify_pencil(&pencil("J2(0)+J1(0)"), 2).unwrap();
        assert_eq!((c.p, c.label), (Some(1), CollineationLabel::Rnc(1)));
    }

    #[test]
    fn saturation_property_examples() {
        let m = pencil("J2(0)").linear_matrix(1).unwrap();
        assert!(check_saturation_property(&m, 2).unwrap());
        let r3 = Ring::new(3, q(), MonomialOrder::Grevlex);
        let m3 = Tensor3::unit(3, q()).linear_matrix(1).unwrap();
        assert_eq!(m3.ring().nvars(), r3.nvars());
        assert!(matches!(check_saturation_property(&m3, 2), Err(Error::NotBinaryForm(_))));
    }

    #[test]
    fn strata_formulas() {
        assert_eq!(stratum_dimension(3, 3, 2, 2).unwrap(), vec![17]);
        assert_eq!(stratum_dimension(3, 3, 2, 1).unwrap(), vec![14]);
        assert_eq!(stratum_dimension(3, 4, 3, 2).unwrap(), vec![22]);
        assert_eq!(stratum_dimension(3, 4, 3, 1).unwrap(), vec![20, 18]);
        assert_eq!(stratum_dimension(3, 4, 2, 0).unwrap(), vec![12]);
        assert!(stratum_dimension(4, 4, 4, 0).is_err());
        assert!(stratum_dimension(3, 3, 3, 1).is_err());
    }

    #[test]
    fn scrambling_preserves_classification() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let spec = random_block_spec(&mut rng, 6, 7);
            let t = build_pencil(&spec, q()).unwrap();
            let s = scramble(&t, &mut rng);
            let (r, c) = spec.shape();
            for k in admissible_ks(r, c) {
                assert_eq!(classify_pencil(&t, k).unwrap(), classify_pencil(&s, k).unwrap(), "{spec} k={k}");
            }
        }
    }
}
