//! Closure of the image of a rational map given by forms of equal degree.

use super::{HilbertData, Ideal};
use crate::error::{Error, Result};
use crate::poly::{span_basis, MonomialOrder, Poly, Ring};

/// Image of `[f_0 : ... : f_m]`: its ideal in `z0..zm`, Hilbert data and
/// the dimension of the linear span of the image (as a vector space).
#[derive(Debug, Clone)]
pub struct Implicitization {
    pub ideal: Ideal,
    pub hilbert: HilbertData,
    pub span_dim: usize,
}

/// Eliminates the source variables from `z_i - f_i`, with the `z`s weighted
/// by the common degree of the forms.
pub fn implicitize(maps: &[Poly]) -> Result<Implicitization> {
    let first = maps.first().ok_or(Error::AllZeroMap)?;
    let src = first.ring().clone();
    if maps.iter().any(|f| !crate::poly::same_ring(f.ring(), &src)) {
        return Err(Error::RingMismatch);
    }
    if maps.iter().all(Poly::is_zero) {
        return Err(Error::AllZeroMap);
    }
    if !src.has_unit_weights() || maps.iter().any(|f| !f.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let mut degrees = maps.iter().filter_map(Poly::degree);
    let d = degrees.next().unwrap();
    if degrees.any(|e| e != d) {
        return Err(Error::DegreeMismatch);
    }

    let n = src.nvars();
    let m = maps.len();
    let mut names = src.names().to_vec();
    let znames: Vec<String> = (0..m).map(|i| format!("z{i}")).collect();
    names.extend(znames.iter().cloned());
    let mut weights = vec![1; n];
    weights.extend(std::iter::repeat_n(d, m));
    let big = Ring::with_weights(names, src.field(), MonomialOrder::BlockElim(n), weights);
    let src_map: Vec<usize> = (0..n).collect();
    let gens: Vec<Poly> = maps
        .iter()
        .enumerate()
        .map(|(i, f)| &Poly::var(&big, n + i) - &f.embed(&big, &src_map))
        .collect();
    let elim = Ideal::new(&big, gens)?.eliminate(n)?;

    // the kernel is homogeneous for the standard grading on the z's
    let target = Ring::with_names(znames, src.field(), MonomialOrder::Grevlex);
    let id: Vec<usize> = (0..m).collect();
    let image: Vec<Poly> = elim.groebner()?.iter().map(|g| g.embed(&target, &id)).collect();
    let ideal = Ideal::new(&target, image)?;
    let linear = ideal
        .groebner()?
        .iter()
        .filter(|g| g.degree() == Some(1))
        .count();
    let hilbert = ideal.hilbert_data()?;
    Ok(Implicitization {
        ideal,
        hilbert,
        span_dim: m - linear,
    })
}

/// Implicitizes a basis of the span of `maps`; the image is the same up to
/// a linear embedding, so dimension, degree and span agree with
/// [`implicitize`] while the target has fewer variables.
pub fn implicitize_span(maps: &[Poly]) -> Result<Implicitization> {
    let first = maps.first().ok_or(Error::AllZeroMap)?;
    let basis = span_basis(first.ring(), maps);
    if basis.is_empty() {
        return Err(Error::AllZeroMap);
    }
    implicitize(&basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{monomials_of_degree, parse_poly, RingRef};
    use crate::scalar::Field;

    fn p2() -> RingRef {
        Ring::new(3, Field::Rational, MonomialOrder::Grevlex)
    }

    fn forms(r: &RingRef, s: &[&str]) -> Vec<Poly> {
        s.iter().map(|f| parse_poly(r, f).unwrap()).collect()
    }

    fn signature(i: &Implicitization) -> (i64, Option<u64>, usize) {
        (i.hilbert.dim, i.hilbert.degree, i.span_dim)
    }

    #[test]
    fn cremona() {
        let r = p2();
        let im = implicitize(&forms(&r, &["x1*x2", "x0*x2", "x0*x1"])).unwrap();
        assert!(im.ideal.is_zero_ideal() || im.ideal.groebner().unwrap().is_empty());
        assert_eq!(signature(&im), (2, Some(1), 3));
    }

    #[test]
    fn veronese_surface() {
        let r = p2();
        let quadrics: Vec<Poly> = monomials_of_degree(3, 2)
            .into_iter()
            .map(|m| Poly::monomial(&r, m, r.field().one()))
            .collect();
        let im = implicitize(&quadrics).unwrap();
        assert_eq!(signature(&im), (2, Some(4), 6));
    }

    #[test]
    fn cubic_scroll() {
        // quadrics through (1:0:0)
        let r = p2();
        let im = implicitize(&forms(&r, &["x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"])).unwrap();
        assert_eq!(signature(&im), (2, Some(3), 5));
    }

    #[test]
    fn dependent_forms_and_errors() {
        let r = p2();
        let im = implicitize(&forms(&r, &["x0^2", "x1^2", "x0^2 + x1^2"])).unwrap();
        assert_eq!(im.span_dim, 2);
        let sp = implicitize_span(&forms(&r, &["x0^2", "x1^2", "x0^2 + x1^2"])).unwrap();
        assert_eq!(signature(&sp), (im.hilbert.dim, im.hilbert.degree, 2));
        assert_eq!(implicitize(&forms(&r, &["0", "0"])).err(), Some(Error::AllZeroMap));
        assert_eq!(implicitize(&forms(&r, &["x0", "x1^2"])).err(), Some(Error::DegreeMismatch));
    }
}
