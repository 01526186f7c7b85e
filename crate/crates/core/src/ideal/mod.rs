//! Ideals in polynomial rings: Groebner bases, elimination, saturation,
//! Hilbert data, zero-dimensional radicals and implicitization.

mod groebner;
mod hilbert;
mod implicit;
mod radical;

use std::fmt;
use std::sync::OnceLock;

pub use groebner::{groebner_basis, reduce, GroebnerOptions};
pub use hilbert::{hilbert_from_monomials, hilbert_numerator, HilbertData};
pub use implicit::{implicitize, implicitize_span, Implicitization};

use crate::error::{Error, Result};
use crate::poly::{same_ring, MonomialOrder, Poly, Ring, RingRef};

/// An ideal given by generators, with its reduced Groebner basis in the
/// ring's own order computed lazily and cached.
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
    opts: GroebnerOptions,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
            opts: self.opts,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Poly>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
            opts: GroebnerOptions::default(),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal::new(ring, vec![Poly::one(ring)]).unwrap()
    }

    fn from_gb(ring: &RingRef, gb: Vec<Poly>, opts: GroebnerOptions) -> Self {
        let cache = OnceLock::new();
        let _ = cache.set(gb.clone());
        Ideal {
            ring: ring.clone(),
            gens: gb,
            gb: cache,
            opts,
        }
    }

    /// Caps the number of S-pair reductions for every derived computation.
    pub fn with_options(mut self, opts: GroebnerOptions) -> Self {
        self.opts = opts;
        self
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    /// Reduced Groebner basis in the ring's order.
    pub fn groebner(&self) -> Result<&[Poly]> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let gb = groebner_basis(&self.ring, &self.gens, self.opts)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// The same ideal over the same variables with another order; its
    /// generators are the reduced Groebner basis for that order.
    pub fn groebner_in(&self, order: MonomialOrder) -> Result<Ideal> {
        if order == self.ring.order() {
            return Ok(Ideal::from_gb(&self.ring, self.groebner()?.to_vec(), self.opts));
        }
        let ring = self.ring.with_order(order);
        let gens: Vec<Poly> = self.gens.iter().map(|g| g.to_ring(&ring)).collect();
        let gb = groebner_basis(&ring, &gens, self.opts)?;
        Ok(Ideal::from_gb(&ring, gb, self.opts))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(Poly::is_zero)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.iter().any(Poly::is_constant))
    }

    /// Remainder of `f` modulo the reduced Groebner basis.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(reduce(f, self.groebner()?))
    }

    pub fn contains_poly(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner()? == other.groebner()?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Ideal::new(&self.ring, gens)?.with_options(self.opts))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ok(Ideal::new(&self.ring, gens)?.with_options(self.opts))
    }

    /// Elimination ideal `I ∩ k[x_drop, ..]` living in the subring on the
    /// remaining variables; the subring keeps the ring's order when it is
    /// grevlex or lex and falls back to grevlex otherwise.
    pub fn eliminate(&self, drop_count: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        if drop_count > n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: drop_count,
            });
        }
        let sub_order = match self.ring.order() {
            MonomialOrder::BlockElim(_) => MonomialOrder::Grevlex,
            o => o,
        };
        let sub_ring = Ring::with_weights(
            self.ring.names()[drop_count..].to_vec(),
            self.ring.field(),
            sub_order,
            self.ring.weights()[drop_count..].to_vec(),
        );
        if self.is_zero_ideal() {
            return Ok(Ideal::zero(&sub_ring).with_options(self.opts));
        }
        let elim = self.groebner_in(MonomialOrder::BlockElim(drop_count))?;
        let var_map: Vec<Option<usize>> = (0..n)
            .map(|i| i.checked_sub(drop_count))
            .collect();
        let gens: Vec<Poly> = elim
            .gens
            .iter()
            .filter_map(|g| g.restrict(&sub_ring, &var_map))
            .collect();
        Ok(Ideal::new(&sub_ring, gens)?.with_options(self.opts))
    }

    /// Prepends one extra variable `t` (weight 1) to the ring.
    fn extended_ring(&self) -> (RingRef, Vec<usize>) {
        let mut names = vec![fresh_name(&self.ring)];
        names.extend(self.ring.names().iter().cloned());
        let mut weights = vec![1];
        weights.extend(self.ring.weights());
        let ring = Ring::with_weights(names, self.ring.field(), MonomialOrder::BlockElim(1), weights);
        let map = (1..=self.ring.nvars()).collect();
        (ring, map)
    }

    /// Brings an eliminated ideal back into the original ring.
    fn back_home(&self, eliminated: Ideal) -> Result<Ideal> {
        let n = self.ring.nvars();
        let map: Vec<usize> = (0..n).collect();
        let gens = eliminated
            .gens
            .iter()
            .map(|g| g.embed(&self.ring, &map))
            .collect();
        Ok(Ideal::new(&self.ring, gens)?.with_options(self.opts))
    }

    /// `I : f^∞`, via `I + (t f - 1)` and elimination of `t`.
    pub fn saturate(&self, f: &Poly) -> Result<Ideal> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::UndefinedCollineation("saturation by zero".into()));
        }
        if f.is_constant() {
            return Ok(Ideal::from_gb(&self.ring, self.groebner()?.to_vec(), self.opts));
        }
        let (ext, map) = self.extended_ring();
        let t = Poly::var(&ext, 0);
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.embed(&ext, &map)).collect();
        gens.push(&(&t * &f.embed(&ext, &map)) - &Poly::one(&ext));
        let elim = Ideal::new(&ext, gens)?.with_options(self.opts).eliminate(1)?;
        self.back_home(elim)
    }

    /// `I ∩ J`, via `t I + (1 - t) J` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let (ext, map) = self.extended_ring();
        let t = Poly::var(&ext, 0);
        let one_minus_t = &Poly::one(&ext) - &t;
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| &t * &g.embed(&ext, &map)).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.embed(&ext, &map)));
        let elim = Ideal::new(&ext, gens)?.with_options(self.opts).eliminate(1)?;
        self.back_home(elim)
    }

    /// Saturation by the irrelevant ideal: `⋂_i (I : x_i^∞)`.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let mut acc: Option<Ideal> = None;
        for i in 0..self.ring.nvars() {
            let s = self.saturate(&Poly::var(&self.ring, i))?;
            if s.is_unit()? {
                continue;
            }
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        let result = acc.unwrap_or_else(|| Ideal::unit(&self.ring).with_options(self.opts));
        Ok(Ideal::from_gb(&self.ring, result.groebner()?.to_vec(), self.opts))
    }

    /// Projective dimension and degree from the grevlex lead-term ideal.
    pub fn hilbert_data(&self) -> Result<HilbertData> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if !self.ring.has_unit_weights() {
            return Err(Error::NotHomogeneous);
        }
        let gb = self.groebner_in(MonomialOrder::Grevlex)?;
        let leads: Vec<_> = gb
            .gens
            .iter()
            .map(|g| g.lead_monomial().unwrap().clone())
            .collect();
        Ok(hilbert_from_monomials(self.ring.nvars(), &leads))
    }

    /// Radical of a saturated homogeneous ideal defining a finite scheme.
    pub fn zero_dim_radical(&self) -> Result<Ideal> {
        radical::zero_dim_radical(self)
    }

    /// Deterministic dump of the reduced Groebner basis, one generator per
    /// line, ascending by leading monomial.
    pub fn dump(&self) -> Result<String> {
        Ok(self
            .groebner()?
            .iter()
            .map(|g| format!("{g}\n"))
            .collect())
    }
}

fn fresh_name(ring: &Ring) -> String {
    let mut name = "t".to_string();
    while ring.names().contains(&name) {
        name.push('_');
    }
    name
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::scalar::Field;

    fn ring_named(names: &[&str], order: MonomialOrder) -> RingRef {
        Ring::with_names(names.iter().map(|s| s.to_string()).collect(), Field::Rational, order)
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_poly(r, s).unwrap()).collect()).unwrap()
    }

    fn gb_strings(i: &Ideal) -> Vec<String> {
        i.groebner().unwrap().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn hand_buchberger_example() {
        let r = ring_named(&["x", "y"], MonomialOrder::Lex);
        let i = ideal(&r, &["x - y", "x^2 + y^2 - 1"]);
        assert_eq!(gb_strings(&i), vec!["y^2 - 1/2", "x - y"]);
    }

    #[test]
    fn monomial_and_zero_ideals() {
        let r = Ring::new(3, Field::Rational, MonomialOrder::Grevlex);
        let i = ideal(&r, &["x0*x1", "x1*x2"]);
        let mut got = gb_strings(&i);
        got.sort();
        assert_eq!(got, vec!["x0*x1", "x1*x2"]);
        assert!(ideal(&r, &["0"]).groebner().unwrap().is_empty());
    }

    #[test]
    fn normal_forms() {
        let r = Ring::with_names(vec!["x".into(), "y".into()], Field::Rational, MonomialOrder::Grevlex);
        let i = ideal(&r, &["x"]);
        assert!(i.normal_form(&parse_poly(&r, "x^2").unwrap()).unwrap().is_zero());
        assert_eq!(i.normal_form(&parse_poly(&r, "y").unwrap()).unwrap().to_string(), "y");
        let r3 = Ring::new(3, Field::Rational, MonomialOrder::Grevlex);
        let j = ideal(&r3, &["x0*x1", "x1*x2"]);
        assert!(j.contains_poly(&parse_poly(&r3, "x0*x1*x2").unwrap()).unwrap());
        let other = Ring::new(2, Field::Rational, MonomialOrder::Grevlex);
        assert_eq!(i.normal_form(&Poly::var(&other, 0)), Err(Error::RingMismatch));
    }

    #[test]
    fn elimination_examples() {
        let r = ring_named(&["t", "x", "y"], MonomialOrder::Grevlex);
        let i = ideal(&r, &["t*x - 1", "t*y"]);
        let e = i.eliminate(1).unwrap();
        assert_eq!(gb_strings(&e), vec!["y"]);
        assert!(ideal(&r, &[]).eliminate(2).unwrap().is_zero_ideal());
        assert!(matches!(i.eliminate(4), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn veronese_kernel() {
        // z_ij - x_i x_j for i <= j, eliminating x0, x1, x2
        let names: Vec<String> = ["x0", "x1", "x2", "z00", "z01", "z02", "z11", "z12", "z22"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let r = Ring::with_weights(names, Field::Rational, MonomialOrder::Grevlex, vec![1, 1, 1, 2, 2, 2, 2, 2, 2]);
        let i = ideal(
            &r,
            &["z00 - x0^2", "z01 - x0*x1", "z02 - x0*x2", "z11 - x1^2", "z12 - x1*x2", "z22 - x2^2"],
        );
        let e = i.eliminate(3).unwrap();
        let zr = e.ring().clone();
        let minors = [
            "z00*z11 - z01^2",
            "z00*z22 - z02^2",
            "z11*z22 - z12^2",
            "z00*z12 - z01*z02",
            "z01*z12 - z02*z11",
            "z01*z22 - z02*z12",
        ];
        for m in minors {
            assert!(e.contains_poly(&parse_poly(&zr, m).unwrap()).unwrap(), "{m}");
        }
        // and nothing of degree 1
        assert!(e.groebner().unwrap().iter().all(|g| g.degree() == Some(4)));
    }

    #[test]
    fn saturation_examples() {
        let r = Ring::new(3, Field::Rational, MonomialOrder::Grevlex);
        let x0 = Poly::var(&r, 0);
        let i = ideal(&r, &["x0^2*x1"]);
        assert_eq!(gb_strings(&i.saturate(&x0).unwrap()), vec!["x1"]);
        let j = ideal(&r, &["x0*x1", "x0*x2"]);
        assert_eq!(gb_strings(&j.saturate(&x0).unwrap()), vec!["x2", "x1"]);
        let k = ideal(&r, &["x0^2 + x1*x2", "x1^3"]);
        assert!(k.saturate(&Poly::one(&r)).unwrap().equals(&k).unwrap());
    }

    #[test]
    fn irrelevant_saturation() {
        let r2 = Ring::new(2, Field::Rational, MonomialOrder::Grevlex);
        let i = ideal(&r2, &["x0^2", "x0*x1"]);
        assert_eq!(gb_strings(&i.saturate_irrelevant().unwrap()), vec!["x0"]);
        let j = ideal(&r2, &["x0^2"]);
        assert_eq!(gb_strings(&j.saturate_irrelevant().unwrap()), vec!["x0^2"]);
        // two points, not to be confused with iterated saturation
        let pts = ideal(&r2, &["x0*x1"]);
        assert!(pts.saturate_irrelevant().unwrap().equals(&pts).unwrap());
        let r3 = Ring::new(3, Field::Rational, MonomialOrder::Grevlex);
        let three = ideal(&r3, &["x0*x1", "x0*x2", "x1*x2"]);
        assert!(three.saturate_irrelevant().unwrap().equals(&three).unwrap());
        let inhomog = ideal(&r3, &["x0 + 1"]);
        assert!(matches!(inhomog.saturate_irrelevant(), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn hilbert_examples() {
        let r = Ring::new(3, Field::Rational, MonomialOrder::Grevlex);
        let h = |gens: &[&str]| ideal(&r, gens).hilbert_data().unwrap();
        assert_eq!(h(&["x0*x1", "x0*x2", "x1*x2"]), HilbertData { dim: 0, degree: Some(3) });
        assert_eq!(h(&["x1^2", "x1*x2", "x2^2"]), HilbertData { dim: 0, degree: Some(3) });
        assert_eq!(h(&[]), HilbertData { dim: 2, degree: Some(1) });
        assert_eq!(h(&["x0", "x1", "x2"]).dim, -1);
    }

    #[test]
    fn containment_and_equality() {
        let r = Ring::with_names(vec!["x".into(), "y".into()], Field::Rational, MonomialOrder::Grevlex);
        let x = ideal(&r, &["x"]);
        let prod = ideal(&r, &["x^2", "x*y"]);
        assert!(x.contains(&prod).unwrap());
        assert!(!x.equals(&prod).unwrap());
        let gb = Ideal::new(&r, prod.groebner().unwrap().to_vec()).unwrap();
        assert!(prod.equals(&gb).unwrap());
    }

    #[test]
    fn intersection() {
        let r = Ring::new(2, Field::Rational, MonomialOrder::Grevlex);
        let a = ideal(&r, &["x0"]);
        let b = ideal(&r, &["x1"]);
        assert_eq!(gb_strings(&a.intersect(&b).unwrap()), vec!["x0*x1"]);
    }

    #[test]
    fn resource_cap() {
        let r = Ring::new(4, Field::Rational, MonomialOrder::Lex);
        let i = ideal(&r, &["x0*x1 - x2^2", "x1*x3 - x0^3", "x2*x3 - x1^2 + x0"])
            .with_options(GroebnerOptions { max_pairs: 1 });
        assert_eq!(i.groebner().err(), Some(Error::ResourceExhausted(1)));
    }

    #[test]
    fn dump_is_stable() {
        let r = Ring::new(3, Field::Rational, MonomialOrder::Grevlex);
        let i = ideal(&r, &["x1*x2", "x0*x1"]);
        let j = ideal(&r, &["x0*x1", "x1*x2"]);
        assert_eq!(i.dump().unwrap(), "x1*x2\nx0*x1\n");
        assert_eq!(i.dump().unwrap(), j.dump().unwrap());
    }
}
