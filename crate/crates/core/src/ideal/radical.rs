//! Radicals of zero-dimensional projective schemes by the squarefree-parts
//! method in an affine chart.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{UniPoly, MonomialOrder, Poly, Ring, RingRef};
use crate::scalar::Scalar;

const CHART_SEED: u64 = 0x5eed_c4a7;
const RANDOM_CHARTS: usize = 32;

/// Deterministic sequence of candidate chart forms: coordinates, pairwise
/// sums, the full sum, then seeded pseudorandom forms.
fn chart_candidates(n: usize, field: crate::scalar::Field) -> impl Iterator<Item = Vec<Scalar>> {
    let unit = move |idx: &[usize]| {
        let mut v = vec![field.zero(); n];
        for &i in idx {
            v[i] = field.one();
        }
        v
    };
    let singles: Vec<_> = (0..n).map(|i| unit(&[i])).collect();
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| unit(&[i, j]))
        .collect();
    let all = if n > 2 { vec![unit(&(0..n).collect::<Vec<_>>())] } else { Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(CHART_SEED);
    let random: Vec<_> = (0..RANDOM_CHARTS)
        .map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(-50..=50))).collect())
        .collect();
    singles.into_iter().chain(pairs).chain(all).chain(random)
}

/// Minimal polynomial of variable `v` over the affine ideal `j` (which must
/// be zero-dimensional), by eliminating every other variable.
fn minimal_polynomial(j: &Ideal, v: usize) -> Result<UniPoly> {
    let ring = j.ring();
    let n = ring.nvars();
    // move v to the last position
    let perm: Vec<usize> = (0..n).map(|i| match i.cmp(&v) {
        std::cmp::Ordering::Less => i,
        std::cmp::Ordering::Equal => n - 1,
        std::cmp::Ordering::Greater => i - 1,
    }).collect();
    let mut names = vec![String::new(); n];
    for (i, &p) in perm.iter().enumerate() {
        names[p] = ring.names()[i].clone();
    }
    let permuted = Ring::with_names(names, ring.field(), MonomialOrder::Grevlex);
    let gens = j.generators().iter().map(|g| g.embed(&permuted, &perm)).collect();
    let elim = Ideal::new(&permuted, gens)?.with_options(j.opts).eliminate(n - 1)?;
    let gb = elim.groebner()?;
    let g = gb
        .first()
        .ok_or(Error::NotZeroDimensional(1))?;
    let d = g.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![ring.field().zero(); d + 1];
    for (m, c) in g.terms() {
        coeffs[m.exponents()[0] as usize] = c.clone();
    }
    Ok(UniPoly::new(ring.field(), coeffs))
}

pub(super) fn zero_dim_radical(i: &Ideal) -> Result<Ideal> {
    let ring = i.ring().clone();
    let h = i.hilbert_data()?;
    if h.dim > 0 {
        return Err(Error::NotZeroDimensional(h.dim));
    }
    if h.dim < 0 {
        return Ok(Ideal::unit(&ring).with_options(i.opts));
    }
    let n = ring.nvars();
    let field = ring.field();
    let grevlex = Ring::with_names(ring.names().to_vec(), field, MonomialOrder::Grevlex);
    let base = Ideal::new(
        &grevlex,
        i.generators().iter().map(|g| g.to_ring(&grevlex)).collect(),
    )?
    .with_options(i.opts);

    for ell in chart_candidates(n, field) {
        let lin = Poly::linear(&grevlex, &ell);
        let test = base.sum(&Ideal::new(&grevlex, vec![lin.clone()])?)?;
        if !test.hilbert_data()?.is_empty() {
            continue;
        }
        log::debug!("radical chart form {lin}");
        let rad = radical_in_chart(&base, &grevlex, &ell)?;
        let back: Vec<Poly> = rad.iter().map(|g| g.to_ring(&ring)).collect();
        let out = Ideal::new(&ring, back)?.with_options(i.opts).saturate_irrelevant()?;
        return Ok(out);
    }
    Err(Error::ResourceExhausted(RANDOM_CHARTS))
}

/// Radical of `base` computed in the chart `ell = 1`; returns homogeneous
/// generators in `ring`.
fn radical_in_chart(base: &Ideal, ring: &RingRef, ell: &[Scalar]) -> Result<Vec<Poly>> {
    let n = ring.nvars();
    let field = ring.field();
    let j = ell.iter().position(|c| !c.is_zero()).expect("nonzero chart form");
    let cj_inv = ell[j].inv()?;

    // y_j = ell(x), y_i = x_i otherwise; so x_j = (y_j - sum_{i != j} c_i y_i) / c_j
    let to_y: Vec<Poly> = (0..n)
        .map(|i| {
            if i != j {
                return Poly::var(ring, i);
            }
            let mut coeffs: Vec<Scalar> = ell.iter().map(|c| -&(c * &cj_inv)).collect();
            coeffs[j] = cj_inv.clone();
            Poly::linear(ring, &coeffs)
        })
        .collect();
    let from_y: Vec<Poly> = (0..n)
        .map(|i| if i == j { Poly::linear(ring, ell) } else { Poly::var(ring, i) })
        .collect();

    let affine: Vec<Poly> = base
        .groebner()?
        .iter()
        .map(|g| g.compose(ring, &to_y).set_to_one(&[j]))
        .collect();
    let affine = Ideal::new(ring, affine)?.with_options(base.opts);

    let mut gens: Vec<Poly> = affine.groebner()?.to_vec();
    if gens.iter().any(Poly::is_constant) {
        return Ok(vec![Poly::one(ring)]);
    }
    // the chart variable is absent, so eliminate within the remaining ones
    let others: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    let sub_names: Vec<String> = others.iter().map(|&i| ring.names()[i].clone()).collect();
    let sub = Ring::with_names(sub_names, field, MonomialOrder::Grevlex);
    let to_sub: Vec<Option<usize>> = (0..n).map(|i| others.iter().position(|&o| o == i)).collect();
    let sub_gens: Vec<Poly> = gens
        .iter()
        .map(|g| g.restrict(&sub, &to_sub).expect("chart variable eliminated"))
        .collect();
    let sub_ideal = Ideal::new(&sub, sub_gens)?.with_options(base.opts);
    for (k, &v) in others.iter().enumerate() {
        let mp = minimal_polynomial(&sub_ideal, k)?;
        let sf = mp.squarefree_part();
        if sf.degree() == mp.degree() {
            continue;
        }
        let terms = sf.coeffs().iter().enumerate().map(|(e, c)| {
            let mut ex = vec![0u16; n];
            ex[v] = e as u16;
            (crate::poly::Monomial::new(ex), c.clone())
        });
        gens.push(Poly::from_terms(ring, terms));
    }
    let reduced = Ideal::new(ring, gens)?.with_options(base.opts);
    // a grevlex basis of the chart ideal homogenizes to its projective closure
    let closure: Vec<Poly> = reduced
        .groebner()?
        .iter()
        .map(|g| g.homogenize(j).compose(ring, &from_y))
        .collect();
    Ok(closure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::scalar::Field;

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_poly(r, s).unwrap()).collect()).unwrap()
    }

    fn p2(field: Field) -> RingRef {
        Ring::new(3, field, MonomialOrder::Grevlex)
    }

    #[test]
    fn radical_examples() {
        for field in [Field::Rational, Field::Prime(32003)] {
            let r = p2(field);
            let line = ideal(&r, &["x1", "x2"]);
            assert!(ideal(&r, &["x1^2", "x2"]).zero_dim_radical().unwrap().equals(&line).unwrap());
            assert!(ideal(&r, &["x1^2", "x1*x2", "x2^2"]).zero_dim_radical().unwrap().equals(&line).unwrap());
            let pts = ideal(&r, &["x0*x1", "x0*x2", "x1*x2"]);
            assert!(pts.zero_dim_radical().unwrap().equals(&pts).unwrap());
        }
    }

    #[test]
    fn radical_of_non_coordinate_points() {
        let r = p2(Field::Rational);
        // double point at (1:1:1) union a reduced point at (1:2:3)
        let a = ideal(&r, &["(x1 - x0)^2", "x2 - x1"]);
        let b = ideal(&r, &["x1 - 2*x0", "x2 - 3*x0"]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.hilbert_data().unwrap().degree, Some(3));
        let rad = i.zero_dim_radical().unwrap();
        assert_eq!(rad.hilbert_data().unwrap().degree, Some(2));
        assert!(rad.contains(&i).unwrap());
        assert!(rad.zero_dim_radical().unwrap().equals(&rad).unwrap());
    }

    #[test]
    fn rejects_curves() {
        let r = p2(Field::Rational);
        assert_eq!(
            ideal(&r, &["x0*x1 - x2^2"]).zero_dim_radical().err(),
            Some(Error::NotZeroDimensional(1))
        );
    }
}
