//! Dispatch from a tensor, a factor and a minor size to the matching
//! classifier.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{implicitize_span, Ideal, Implicitization};
use crate::label::CollineationLabel;
use crate::net::classify_net;
use crate::pencil::classify_pencil;
use crate::poly::Poly;
use crate::scheme::SchemeProfile;
use crate::tensor::{minors, Tensor3};

/// Which branch produced a label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Path {
    #[serde(rename = "lemma")]
    Lemma,
    #[serde(rename = "gcd")]
    Gcd,
    #[serde(rename = "dimL2")]
    DimL2,
    /// Labelled from the numerical type of the implicitized image.
    #[serde(rename = "oracle")]
    Oracle,
    #[serde(rename = "pencil")]
    Pencil,
    #[serde(rename = "point")]
    Point,
    #[serde(rename = "undefined")]
    Undefined,
}

/// Outcome of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub label: CollineationLabel,
    pub span: Option<usize>,
    pub factor: usize,
    pub k: usize,
    pub path: Path,
    /// Flattening ranks of the tensor.
    pub ranks: [usize; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_locus: Option<SchemeProfile>,
    #[serde(rename = "dimL", skip_serializing_if = "Option::is_none")]
    pub dim_l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma3: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Bring `factor` (1-based) to the front in the order used by
/// [`Tensor3::linear_matrix`].
fn front(factor: usize) -> Result<[usize; 3]> {
    match factor {
        1 => Ok([0, 1, 2]),
        2 => Ok([1, 2, 0]),
        3 => Ok([2, 0, 1]),
        _ => Err(Error::OutOfRange(format!("factor {factor}"))),
    }
}

/// Classifies the `k`-th collineation variety of `t` on `factor`.
///
/// The tensor is first reduced to its concise core. A factor of dimension
/// one maps to a point, two goes to the pencil classifier, three with
/// `k = 2` to the net classifier; everything else is labelled from the
/// implicitized image.
pub fn classify(t: &Tensor3, factor: usize, k: usize) -> Result<Classification> {
    let perm = front(factor)?;
    let m = t.linear_matrix(factor)?;
    let (rows, cols) = m.shape();
    let ranks = t.flattening_ranks();
    let mut out = Classification {
        label: CollineationLabel::Undefined(String::new()),
        span: None,
        factor,
        k,
        path: Path::Undefined,
        ranks,
        base_locus: None,
        dim_l: None,
        p: None,
        sigma3: None,
        reason: None,
    };
    if k == 0 || k > rows.min(cols) {
        let reason = format!("k = {k} is out of range for a {rows}x{cols} matrix");
        out.label = CollineationLabel::Undefined(reason.clone());
        out.reason = Some(reason);
        return Ok(out);
    }
    let list = m.minor_list(k)?;
    if list.iter().all(Poly::is_zero) {
        let reason = format!("all {k}x{k} minors of factor {factor} vanish");
        out.label = CollineationLabel::Undefined(reason.clone());
        out.reason = Some(reason);
        return Ok(out);
    }

    let core = t.concise_reduce()?.tensor.permute(perm);
    let nf = core.dims()[0];
    match nf {
        1 => {
            out.label = CollineationLabel::Point;
            out.path = Path::Point;
        }
        2 => {
            let pc = classify_pencil(&core, k)?;
            out.label = pc.label;
            out.p = pc.p;
            out.reason = pc.reason;
            out.path = if out.label.is_undefined() { Path::Undefined } else { Path::Pencil };
        }
        3 if k == 2 => {
            let nc = classify_net(&core, 1)?;
            out.label = nc.label;
            out.base_locus = Some(nc.base_locus);
            out.dim_l = Some(nc.dim_l);
            out.path = nc.path;
            out.sigma3 = nc.sigma3;
        }
        _ => {
            let core_m = core.linear_matrix(1)?;
            let image = implicitize_span(&minors(core_m.ring(), &core_m.rows(), k))?;
            out.dim_l = Some(image.span_dim);
            out.label = label_image(&image)?;
            out.path = Path::Oracle;
        }
    }
    out.span = out.label.expected_span();
    Ok(out)
}

/// Labels an implicitized image by its numerical type, using smoothness to
/// tell quadric surfaces from cones and the cubic scroll from the cone over
/// a twisted cubic.
pub fn label_image(image: &Implicitization) -> Result<CollineationLabel> {
    use CollineationLabel::*;
    let dim = image.hilbert.dim;
    let deg = image.hilbert.degree.unwrap_or(0);
    let span = image.span_dim;
    let label = match (dim, deg, span) {
        (0, 1, 1) => Point,
        (1, 1, 2) => Line,
        (1, 2, 3) => Conic,
        (1, d, s) if s as u64 == d + 1 => Rnc(d as u32),
        (2, 1, 3) => Plane,
        (2, 2, 4) => {
            if is_smooth(&image.ideal, dim)? {
                QuadricSurface
            } else {
                QuadricCone
            }
        }
        (2, 3, 5) if is_smooth(&image.ideal, dim)? => Scroll12,
        _ => Other { dim, deg, span },
    };
    Ok(label)
}

/// Jacobian criterion for a nondegenerate projective variety of dimension
/// `dim` given by its prime ideal.
fn is_smooth(ideal: &Ideal, dim: i64) -> Result<bool> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let codim = n as i64 - 1 - dim;
    if codim <= 0 {
        return Ok(true);
    }
    let gens = ideal.groebner()?.to_vec();
    let jac: Vec<Vec<Poly>> = gens.iter().map(|g| (0..n).map(|v| g.partial(v)).collect()).collect();
    let mut sing = gens.clone();
    sing.extend(minors(ring, &jac, codim as usize));
    Ok(Ideal::new(ring, sing)?.hilbert_data()?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::build_pencil;
    use crate::scalar::Field;

    #[test]
    fn unit_tensor_on_every_factor() {
        let u = Tensor3::unit(3, Field::Rational);
        for f in 1..=3 {
            let c = classify(&u, f, 2).unwrap();
            assert_eq!(c.label, CollineationLabel::Plane);
            assert_eq!(c.span, Some(3));
        }
        let c = classify(&u, 1, 3).unwrap();
        assert_eq!(c.label, CollineationLabel::Point);
    }

    #[test]
    fn pencil_dispatch_uses_the_right_factor() {
        let spec = "L2".parse().unwrap();
        let t = build_pencil(&spec, Field::Rational).unwrap();
        let c = classify(&t, 1, 2).unwrap();
        assert_eq!(c.label, CollineationLabel::Rnc(2));
        assert_eq!(c.path, Path::Pencil);
        // factor 2 of an L2 pencil has dimension 2 and a 3x2 matrix
        let c2 = classify(&t, 2, 2).unwrap();
        assert!(!c2.label.is_undefined());
    }

    #[test]
    fn vanishing_minors_are_undefined() {
        let t = Tensor3::from_int_terms([3, 3, 3], Field::Rational, &[(0, 0, 0, 1), (1, 0, 1, 1)]).unwrap();
        let c = classify(&t, 1, 2).unwrap();
        assert!(c.label.is_undefined());
        assert_eq!(c.path, Path::Undefined);
        assert!(classify(&t, 1, 4).unwrap().label.is_undefined());
    }

    #[test]
    fn non_concise_factor_is_reduced() {
        // x0 and x1 only: the net collapses to a pencil on factor 1
        let t = Tensor3::from_int_terms([3, 2, 2], Field::Rational, &[(0, 0, 0, 1), (1, 1, 1, 1)]).unwrap();
        let c = classify(&t, 1, 2).unwrap();
        assert_eq!(c.path, Path::Pencil);
        assert_eq!(c.label, CollineationLabel::Point);
    }
}
