use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector, one slot per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(exponents: Vec<u16>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders. `BlockElim(k)` compares the first `k` variables by
/// grevlex and breaks ties by grevlex on the remaining ones, so any monomial
/// involving the first block beats every monomial free of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    BlockElim(usize),
}

impl MonomialOrder {
    pub fn compare(&self, weights: &[u32], a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => grevlex(weights, &a.0, &b.0),
            MonomialOrder::BlockElim(k) => {
                let k = k.min(a.0.len());
                grevlex(&weights[..k], &a.0[..k], &b.0[..k])
                    .then_with(|| grevlex(&weights[k..], &a.0[k..], &b.0[k..]))
            }
        }
    }
}

fn grevlex(weights: &[u32], a: &[u16], b: &[u16]) -> Ordering {
    let wd = |e: &[u16]| -> u32 { e.iter().zip(weights).map(|(&x, &w)| x as u32 * w).sum() };
    wd(a).cmp(&wd(b)).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Compares two monomials under `order` with standard (unit) weights.
pub fn mono_cmp(order: MonomialOrder, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    if m1.nvars() != m2.nvars() {
        return Err(Error::ArityMismatch {
            expected: m1.nvars(),
            got: m2.nvars(),
        });
    }
    let weights = vec![1; m1.nvars()];
    Ok(order.compare(&weights, m1, m2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn order_examples() {
        assert_eq!(
            mono_cmp(MonomialOrder::Grevlex, &m(&[2, 0]), &m(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            mono_cmp(MonomialOrder::Lex, &m(&[1, 0]), &m(&[0, 3])).unwrap(),
            Ordering::Greater
        );
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::BlockElim(1)] {
            assert_eq!(mono_cmp(order, &m(&[1, 2]), &m(&[1, 2])).unwrap(), Ordering::Equal);
        }
        assert!(matches!(
            mono_cmp(MonomialOrder::Lex, &m(&[1]), &m(&[1, 0])),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn grevlex_is_not_lex() {
        // x0*x2 vs x1^2: lex says x0*x2 wins, grevlex says x1^2 wins
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(mono_cmp(MonomialOrder::Lex, &a, &b).unwrap(), Ordering::Greater);
        assert_eq!(mono_cmp(MonomialOrder::Grevlex, &a, &b).unwrap(), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates() {
        // t vs x^5 with t in the first block
        let t = m(&[1, 0]);
        let x5 = m(&[0, 5]);
        assert_eq!(
            mono_cmp(MonomialOrder::BlockElim(1), &t, &x5).unwrap(),
            Ordering::Greater
        );
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, 3).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in mono3(), b in mono3(), c in mono3()) {
            let w = [1, 1, 1];
            for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::BlockElim(1), MonomialOrder::BlockElim(2)] {
                prop_assert_eq!(order.compare(&w, &a, &b), order.compare(&w, &a.mul(&c), &b.mul(&c)));
                prop_assert_ne!(order.compare(&w, &a.mul(&c), &Monomial::one(3)), Ordering::Less);
            }
        }
    }
}
