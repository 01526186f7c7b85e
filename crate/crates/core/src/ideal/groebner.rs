//! Buchberger's algorithm with the coprime and chain criteria and sugar
//! selection.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::poly::{span_basis, Monomial, Poly, RingRef};

/// Tuning knobs for a Groebner basis run.
#[derive(Debug, Clone, Copy)]
pub struct GroebnerOptions {
    /// Maximum number of S-polynomials reduced before giving up.
    pub max_pairs: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions { max_pairs: 500_000 }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Full reduction of `f` modulo `basis` (which need not be a Groebner
/// basis). Every element of `basis` must be monic.
pub fn reduce(f: &Poly, basis: &[Poly]) -> Poly {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, crate::scalar::Scalar)> = Vec::new();
    while let Some((m, c)) = p.terms().first().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.lead_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let q = m.div(g.lead_monomial().unwrap()).unwrap();
                p = p.sub_mul_term(&c, &q, g);
            }
            None => {
                rem.push((m.clone(), c.clone()));
                p = p.sub_mul_term(
                    &ring.field().one(),
                    &Monomial::one(ring.nvars()),
                    &Poly::monomial(&ring, m, c),
                );
            }
        }
    }
    Poly::from_terms(&ring, rem)
}

fn linear_preprocess(ring: &RingRef, gens: Vec<Poly>) -> Vec<Poly> {
    if !gens.iter().all(Poly::is_homogeneous) {
        return gens;
    }
    let mut by_degree: BTreeMap<u32, Vec<Poly>> = BTreeMap::new();
    for g in gens {
        by_degree.entry(g.degree().unwrap_or(0)).or_default().push(g);
    }
    by_degree
        .into_values()
        .flat_map(|group| span_basis(ring, &group))
        .collect()
}

/// Reduced Groebner basis of the ideal generated by `gens` with respect to
/// the order of `ring`, sorted by ascending leading monomial.
pub fn groebner_basis(ring: &RingRef, gens: &[Poly], opts: GroebnerOptions) -> Result<Vec<Poly>> {
    let gens: Vec<Poly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.to_ring(ring))
        .collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    if gens.iter().any(Poly::is_constant) {
        return Ok(vec![Poly::one(ring)]);
    }
    let gens = linear_preprocess(ring, gens);

    let mut basis: Vec<Poly> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut queue: Vec<Pair> = Vec::new();

    let push = |h: Poly,
                    sugar: u32,
                    basis: &mut Vec<Poly>,
                    sugars: &mut Vec<u32>,
                    pending: &mut HashSet<(usize, usize)>,
                    queue: &mut Vec<Pair>| {
        let j = basis.len();
        let lm_h = h.lead_monomial().unwrap().clone();
        for (i, g) in basis.iter().enumerate() {
            let lm_g = g.lead_monomial().unwrap();
            let lcm = lm_g.lcm(&lm_h);
            let s = (sugars[i] + ring.degree(&lcm) - ring.degree(lm_g))
                .max(sugar + ring.degree(&lcm) - ring.degree(&lm_h));
            pending.insert((i, j));
            queue.push(Pair { i, j, lcm, sugar: s });
        }
        basis.push(h);
        sugars.push(sugar);
    };

    for g in gens {
        let h = reduce(&g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Poly::one(ring)]);
        }
        let s = h.sugar();
        push(h.make_monic(), s, &mut basis, &mut sugars, &mut pending, &mut queue);
    }

    let mut reductions = 0usize;
    while !queue.is_empty() {
        // smallest sugar first, ties by smaller lcm
        let idx = (0..queue.len())
            .min_by(|&a, &b| {
                queue[a]
                    .sugar
                    .cmp(&queue[b].sugar)
                    .then_with(|| ring.cmp(&queue[a].lcm, &queue[b].lcm))
            })
            .unwrap();
        let pair = queue.swap_remove(idx);
        pending.remove(&(pair.i, pair.j));

        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (lmi, lmj) = (fi.lead_monomial().unwrap(), fj.lead_monomial().unwrap());
        if lmi.is_coprime(lmj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lead_monomial().unwrap().divides(&pair.lcm)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }

        reductions += 1;
        if reductions > opts.max_pairs {
            return Err(Error::ResourceExhausted(opts.max_pairs));
        }
        let one = ring.field().one();
        let s = fi
            .mul_term(&pair.lcm.div(lmi).unwrap(), &one)
            .sub_mul_term(&one, &pair.lcm.div(lmj).unwrap(), fj);
        let h = reduce(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Poly::one(ring)]);
        }
        push(h.make_monic(), pair.sugar, &mut basis, &mut sugars, &mut pending, &mut queue);
    }

    Ok(reduce_basis(ring, basis))
}

/// Turns a Groebner basis into the reduced one, sorted ascending by leading
/// monomial.
fn reduce_basis(ring: &RingRef, basis: Vec<Poly>) -> Vec<Poly> {
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.lead_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lh = h.lead_monomial().unwrap();
            k != i && lh.divides(lm) && (lh != lm || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g.clone())
                .collect();
            reduce(&minimal[i], &others).make_monic()
        })
        .collect();
    reduced.sort_by(|a, b| ring.cmp(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    reduced
}
