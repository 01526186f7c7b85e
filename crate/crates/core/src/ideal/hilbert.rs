//! Hilbert series of monomial ideals and the dimension/degree read off them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;

/// Projective dimension and degree of the scheme cut out by a homogeneous
/// ideal. `dim == -1` means the scheme is empty and `degree` is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertData {
    pub dim: i64,
    pub degree: Option<u64>,
}

impl HilbertData {
    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `S / M`,
/// where `M` is generated by `gens` (standard grading). Coefficients are
/// listed from `t^0` upwards.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut memo = HashMap::new();
    let mut out = numerator(minimalize(gens.to_vec()), &mut memo);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    let result = if pairwise_coprime {
        gens.iter().fold(vec![1], |acc, m| {
            let mut f = vec![0; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        })
    } else {
        // pivot on the variable occurring in the most non-linear generators
        let n = gens[0].nvars();
        let pivot = (0..n)
            .max_by_key(|&v| {
                gens.iter()
                    .filter(|m| m.exponents()[v] > 0 && m.degree() > 1)
                    .count()
            })
            .unwrap();
        let x = Monomial::var(n, pivot);
        let mut plus = gens.clone();
        plus.push(x.clone());
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|m| {
                let mut e = m.exponents().to_vec();
                e[pivot] = e[pivot].saturating_sub(1);
                Monomial::new(e)
            })
            .collect();
        let mut a = numerator(minimalize(plus), memo);
        let b = numerator(minimalize(colon), memo);
        poly_add_shifted(&mut a, &b, 1);
        a
    };
    memo.insert(gens, result.clone());
    result
}

/// Dimension and degree of `Proj(S / M)` for `M` generated by the lead
/// monomials `gens` in `nvars` variables.
pub fn hilbert_from_monomials(nvars: usize, gens: &[Monomial]) -> HilbertData {
    let mut num = hilbert_numerator(gens);
    if num.iter().all(|&c| c == 0) {
        return HilbertData {
            dim: -1,
            degree: None,
        };
    }
    // divide out (1 - t) while N(1) = 0
    let mut order = 0usize;
    while num.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t): q_i = sum_{j<=i} n_j
        let mut q = Vec::with_capacity(num.len() - 1);
        let mut acc = 0;
        for &c in &num[..num.len() - 1] {
            acc += c;
            q.push(acc);
        }
        num = q;
        order += 1;
    }
    let affine_dim = nvars as i64 - order as i64;
    if affine_dim <= 0 {
        return HilbertData {
            dim: -1,
            degree: None,
        };
    }
    let deg = num.iter().sum::<i64>();
    debug_assert!(deg > 0);
    HilbertData {
        dim: affine_dim - 1,
        degree: Some(deg as u64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn three_coordinate_points() {
        let h = hilbert_from_monomials(3, &[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])]);
        assert_eq!(h, HilbertData { dim: 0, degree: Some(3) });
    }

    #[test]
    fn fat_point() {
        let h = hilbert_from_monomials(3, &[m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]);
        assert_eq!(h, HilbertData { dim: 0, degree: Some(3) });
    }

    #[test]
    fn whole_plane_and_empty() {
        assert_eq!(hilbert_from_monomials(3, &[]), HilbertData { dim: 2, degree: Some(1) });
        assert_eq!(hilbert_from_monomials(3, &[m(&[0, 0, 0])]).dim, -1);
        // irrelevant ideal: empty scheme
        let irr = [m(&[1, 0]), m(&[0, 1])];
        assert_eq!(hilbert_from_monomials(2, &irr).dim, -1);
    }

    #[test]
    fn plane_cubic_and_conic() {
        assert_eq!(hilbert_from_monomials(3, &[m(&[3, 0, 0])]), HilbertData { dim: 1, degree: Some(3) });
        // twisted cubic lead terms in grevlex: x1^2, x1x2, x2^2 in P^3 (x0..x3)
        let tc = [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])];
        assert_eq!(hilbert_from_monomials(4, &tc), HilbertData { dim: 1, degree: Some(3) });
    }
}
