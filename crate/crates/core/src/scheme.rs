//! Numerical profiles of base-locus schemes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::tensor::{minors, Tensor3};

/// Local structure of a zero-dimensional scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalType {
    Empty,
    Reduced,
    Curvilinear,
    FatPoint,
    Mixed,
}

/// Dimension, degree, radical degree and local type of a projective
/// scheme. Degree fields are `None` where undefined: no degree for the
/// empty scheme, no radical data in positive dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchemeProfile {
    pub dim: i64,
    pub deg: Option<u64>,
    pub radical_deg: Option<u64>,
    pub local_type: Option<LocalType>,
}

impl SchemeProfile {
    pub fn empty() -> Self {
        SchemeProfile {
            dim: -1,
            deg: None,
            radical_deg: None,
            local_type: Some(LocalType::Empty),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }
}

/// Saturates `ideal` by the irrelevant ideal and profiles the scheme it
/// defines. Returns the saturated ideal alongside.
pub fn profile_scheme(ideal: &Ideal) -> Result<(Ideal, SchemeProfile)> {
    let sat = ideal.saturate_irrelevant()?;
    let h = sat.hilbert_data()?;
    if h.is_empty() {
        return Ok((sat, SchemeProfile::empty()));
    }
    if h.dim > 0 {
        return Ok((
            sat,
            SchemeProfile {
                dim: h.dim,
                deg: h.degree,
                radical_deg: None,
                local_type: None,
            },
        ));
    }
    let deg = h.degree.expect("nonempty scheme has a degree");
    let rad = sat.zero_dim_radical()?;
    let rad_deg = rad.hilbert_data()?.degree.expect("radical of a nonempty scheme");
    let local_type = if rad_deg == deg {
        LocalType::Reduced
    } else if rad_deg == 1 && is_square_of(&sat, &rad)? {
        LocalType::FatPoint
    } else if has_fat_component(&sat, &rad)? {
        LocalType::Mixed
    } else {
        LocalType::Curvilinear
    };
    Ok((
        sat,
        SchemeProfile {
            dim: 0,
            deg: Some(deg),
            radical_deg: Some(rad_deg),
            local_type: Some(local_type),
        },
    ))
}

/// `I = J²` where `J` is the ideal of a point (given by linear generators).
fn is_square_of(i: &Ideal, point: &Ideal) -> Result<bool> {
    let square = point.product(point)?.saturate_irrelevant()?;
    i.equals(&square)
}

/// Some point where the embedding dimension of the scheme equals that of
/// the ambient space, i.e. where the Jacobian matrix of the generators has
/// rank below `n - 1` (`n` the projective dimension).
fn has_fat_component(i: &Ideal, rad: &Ideal) -> Result<bool> {
    let ring = i.ring();
    let nvars = ring.nvars();
    if nvars <= 2 {
        return Ok(false);
    }
    let jac: Vec<Vec<Poly>> = i
        .generators()
        .iter()
        .map(|g| (0..nvars).map(|v| g.partial(v)).collect())
        .collect();
    let size = nvars - 2;
    let mut gens = rad.generators().to_vec();
    gens.extend(minors(ring, &jac, size));
    let locus = Ideal::new(ring, gens)?;
    Ok(!locus.hilbert_data()?.is_empty())
}

/// The saturated ideal of the base locus of the collineation map of
/// `factor` and `k`, with its profile.
pub fn base_locus(t: &Tensor3, factor: usize, k: usize) -> Result<(Ideal, SchemeProfile)> {
    let m = t.linear_matrix(factor)?;
    let (ideal, list) = m.minor_ideal(k)?;
    if list.iter().all(Poly::is_zero) {
        return Err(Error::UndefinedCollineation(format!(
            "all {k}x{k} minors of factor {factor} vanish"
        )));
    }
    profile_scheme(&ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, Ring, RingRef};
    use crate::scalar::Field;

    fn p2() -> RingRef {
        Ring::new(3, Field::Rational, MonomialOrder::Grevlex)
    }

    fn profile(gens: &[&str]) -> SchemeProfile {
        let r = p2();
        let i = Ideal::new(&r, gens.iter().map(|s| parse_poly(&r, s).unwrap()).collect()).unwrap();
        profile_scheme(&i).unwrap().1
    }

    fn zero_dim(deg: u64, rad: u64, lt: LocalType) -> SchemeProfile {
        SchemeProfile {
            dim: 0,
            deg: Some(deg),
            radical_deg: Some(rad),
            local_type: Some(lt),
        }
    }

    #[test]
    fn base_locus_cases() {
        assert_eq!(
            profile(&["x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]),
            zero_dim(1, 1, LocalType::Reduced)
        );
        assert_eq!(profile(&["x1^2", "x0*x2", "x1*x2", "x2^2"]), zero_dim(2, 1, LocalType::Curvilinear));
        assert_eq!(profile(&["x1^2", "x1*x2", "x2^2"]), zero_dim(3, 1, LocalType::FatPoint));
        assert_eq!(profile(&["x0*x2 - x1^2", "x1*x2", "x2^2"]).local_type, Some(LocalType::Curvilinear));
        assert_eq!(profile(&["x0", "x1", "x2"]), SchemeProfile::empty());
        assert_eq!(profile(&["x0*x1"]).local_type, None);
    }

    #[test]
    fn fat_point_plus_reduced_point_is_mixed() {
        let r = p2();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let fat = Ideal::new(&r, vec![p("x1^2"), p("x1*x2"), p("x2^2")]).unwrap();
        let pt = Ideal::new(&r, vec![p("x0"), p("x1 - x2")]).unwrap();
        let i = fat.intersect(&pt).unwrap();
        assert_eq!(profile_scheme(&i).unwrap().1, zero_dim(4, 2, LocalType::Mixed));
    }

    #[test]
    fn base_loci() {
        let u = Tensor3::unit(3, Field::Rational);
        let (_, prof) = base_locus(&u, 1, 2).unwrap();
        assert_eq!(prof, zero_dim(3, 3, LocalType::Reduced));
        let zero_minors = Tensor3::from_int_terms([3, 3, 3], Field::Rational, &[(0, 0, 0, 1), (1, 0, 1, 1)]).unwrap();
        assert!(matches!(base_locus(&zero_minors, 1, 2), Err(Error::UndefinedCollineation(_))));
    }
}
