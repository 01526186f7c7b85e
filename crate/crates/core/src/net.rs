//! Second collineation varieties of nets (`n_f = 3`, `k = 2`).

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::classify::{label_image, Path};
use crate::error::{Error, Result};
use crate::ideal::{implicitize_span, Ideal};
use crate::label::CollineationLabel;
use crate::poly::{span_basis, Poly, RingRef};
use crate::scalar::{Field, Scalar};
use crate::scheme::{profile_scheme, LocalType, SchemeProfile};
use crate::tensor::{LinearFormMatrix, Tensor3};

/// The 2×2 minors of a net and a basis of their span.
#[derive(Debug, Clone)]
pub struct QuadricSystem {
    pub ring: RingRef,
    pub minors: Vec<Poly>,
    pub span: Vec<Poly>,
}

impl QuadricSystem {
    pub fn dim(&self) -> usize {
        self.span.len()
    }
}

/// Minors of size 2 of the linear matrix of `factor`, which must have
/// three variables.
pub fn quadric_system(t: &Tensor3, factor: usize) -> Result<QuadricSystem> {
    let m = t.linear_matrix(factor)?;
    let n = m.ring().nvars();
    if n != 3 {
        return Err(Error::OutOfRange(format!("factor {factor} has dimension {n}, expected 3")));
    }
    let minors = m.minor_list(2)?;
    let span = span_basis(m.ring(), &minors);
    if span.is_empty() {
        return Err(Error::UndefinedCollineation(format!("all 2x2 minors of factor {factor} vanish")));
    }
    Ok(QuadricSystem {
        ring: m.ring().clone(),
        minors,
        span,
    })
}

/// Profile of the scheme cut out by the quadrics `l`.
pub fn profile_base_scheme(l: &[Poly]) -> Result<SchemeProfile> {
    let first = l.first().ok_or(Error::AllZeroMap)?;
    let ideal = Ideal::new(first.ring(), l.to_vec())?;
    Ok(profile_scheme(&ideal)?.1)
}

/// Classification of a net on one factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NetClassification {
    pub label: CollineationLabel,
    /// Dimension of the linear span of the variety (as a vector space).
    pub span: Option<usize>,
    pub base_locus: SchemeProfile,
    #[serde(rename = "dimL")]
    pub dim_l: usize,
    pub path: Path,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma3: Option<bool>,
}

/// Greatest common divisor of two forms, through `lcm = (f) ∩ (g)`.
fn form_gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    if f.is_zero() {
        return Ok(g.make_monic());
    }
    if g.is_zero() {
        return Ok(f.make_monic());
    }
    let ring = f.ring();
    let fi = Ideal::new(ring, vec![f.clone()])?;
    let gi = Ideal::new(ring, vec![g.clone()])?;
    let meet = fi.intersect(&gi)?;
    let lcm = meet
        .groebner()?
        .iter()
        .min_by_key(|p| p.degree())
        .cloned()
        .ok_or(Error::AllZeroMap)?;
    (f * g)
        .exact_div(&lcm)
        .map(|q| q.make_monic())
        .ok_or_else(|| Error::UndefinedCollineation("inconsistent lcm".into()))
}

/// Common factor of all forms in `polys`.
pub fn common_factor(polys: &[Poly]) -> Result<Option<Poly>> {
    let mut acc: Option<Poly> = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        let next = match &acc {
            None => p.make_monic(),
            Some(g) => form_gcd(g, p)?,
        };
        if next.is_constant() {
            return Ok(None);
        }
        acc = Some(next);
    }
    Ok(acc)
}

fn by_span(span: usize) -> CollineationLabel {
    match span {
        1 => CollineationLabel::Point,
        2 => CollineationLabel::Line,
        3 => CollineationLabel::Plane,
        s => CollineationLabel::Other {
            dim: s as i64 - 1,
            deg: 1,
            span: s,
        },
    }
}

fn lemma_label(b: &SchemeProfile) -> Option<CollineationLabel> {
    use CollineationLabel::*;
    if b.is_empty() {
        return Some(Veronese);
    }
    if b.dim != 0 {
        return None;
    }
    let lt = b.local_type?;
    Some(match (b.deg?, lt) {
        (1, _) => Scroll12,
        (2, LocalType::Reduced) => QuadricSurface,
        (2, _) => QuadricCone,
        (3, LocalType::FatPoint) => Conic,
        (3, _) => Plane,
        (4, _) => Line,
        _ => return None,
    })
}

/// Classifies the second collineation variety of `t` on `factor`, where
/// that factor has dimension 3.
pub fn classify_net(t: &Tensor3, factor: usize) -> Result<NetClassification> {
    let sys = quadric_system(t, factor)?;
    let dim_l = sys.dim();
    let base_locus = profile_base_scheme(&sys.span)?;
    let sigma3 = if t.dims() == [3, 3, 3] {
        Some(sigma3_membership(t)?)
    } else {
        None
    };
    let done = |label: CollineationLabel, path: Path| NetClassification {
        span: label.expected_span(),
        label,
        base_locus,
        dim_l,
        path,
        sigma3,
    };

    if let Some(g) = common_factor(&sys.span)? {
        let residual: Vec<Poly> = sys
            .span
            .iter()
            .map(|p| p.exact_div(&g).expect("common factor divides"))
            .collect();
        if residual.iter().all(|r| r.degree().unwrap_or(0) <= 1) {
            let r = span_basis(&sys.ring, &residual).len();
            return Ok(done(by_span(r), Path::Gcd));
        }
    }
    match dim_l {
        1 => return Ok(done(CollineationLabel::Point, Path::DimL2)),
        2 => return Ok(done(CollineationLabel::Line, Path::DimL2)),
        _ => {}
    }
    let deg_b = if base_locus.is_empty() {
        0
    } else {
        base_locus.deg.unwrap_or(0) as usize
    };
    if base_locus.dim <= 0 && dim_l + deg_b == 6 {
        if let Some(label) = lemma_label(&base_locus) {
            return Ok(done(label, Path::Lemma));
        }
    }
    let image = implicitize_span(&sys.span)?;
    Ok(done(label_image(&image)?, Path::Oracle))
}

/// Parameters of the smooth-cuboid normal form with the derived `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuboidParams {
    pub a: BigRational,
    pub p1: BigRational,
    pub p2: BigRational,
    pub b: BigRational,
}

impl CuboidParams {
    pub fn new(a: BigRational, p1: BigRational, p2: BigRational) -> Self {
        let b = &p2 * &p2 - &p1 * &p1 * &p1 - &a * &p1;
        CuboidParams { a, p1, p2, b }
    }

    /// `4a³ + 27b²`.
    pub fn discriminant(&self) -> BigRational {
        let four = BigRational::from_integer(4.into());
        let tw7 = BigRational::from_integer(27.into());
        four * &self.a * &self.a * &self.a + tw7 * &self.b * &self.b
    }
}

/// The cuboid tensor whose factor-1 matrix is
///
/// ```text
/// [ -p1 x0 + x1        -p2 x0 + x2         0   ]
/// [  p2 x0 + x2   (p1² + a) x0 + p1 x1     x1  ]
/// [      0                x1              -x0  ]
/// ```
pub fn cuboid(params: &CuboidParams, field: Field) -> Result<Tensor3> {
    let ring = crate::poly::Ring::new(3, field, crate::poly::MonomialOrder::Grevlex);
    let q = |v: &BigRational| field.from_rational(v);
    let z = field.zero();
    let one = field.one();
    let lin = |c: [Scalar; 3]| Poly::linear(&ring, &c);
    let p1 = q(&params.p1)?;
    let p2 = q(&params.p2)?;
    let c11 = q(&(&params.p1 * &params.p1 + &params.a))?;
    let rows = vec![
        vec![lin([-p1.clone(), one.clone(), z.clone()]), lin([-p2.clone(), z.clone(), one.clone()]), Poly::zero(&ring)],
        vec![lin([p2, z.clone(), one.clone()]), lin([c11, p1, z.clone()]), lin([z.clone(), one.clone(), z.clone()])],
        vec![Poly::zero(&ring), lin([z.clone(), one.clone(), z.clone()]), lin([-one, z.clone(), z])],
    ];
    LinearFormMatrix::from_rows(&ring, rows)?.to_tensor()
}

/// Whether the plane cubic of the cuboid is smooth.
pub fn cuboid_is_smooth(params: &CuboidParams) -> bool {
    !params.discriminant().is_zero()
}

/// Largest Strassen rank on the third secant variety. A rank-one tensor
/// has Strassen rank 2, so border rank 3 bounds the rank by 6.
pub const SIGMA3_MAX_STRASSEN_RANK: usize = 6;

/// Membership test for the third secant variety by the rank of the
/// Strassen flattening.
pub fn sigma3_membership(t: &Tensor3) -> Result<bool> {
    Ok(t.strassen_flattening()?.rank <= SIGMA3_MAX_STRASSEN_RANK)
}
