//! Minors of polynomial matrices by memoized Laplace expansion.

use std::collections::HashMap;

use crate::poly::{Poly, RingRef};

/// Subsets of `0..n` of size `k` as bitmasks, in lexicographic order of
/// their sorted index tuples.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, mask: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..=n - k {
            rec(i + 1, n, k - 1, mask | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

struct Laplace<'a> {
    ring: &'a RingRef,
    m: &'a [Vec<Poly>],
    memo: HashMap<(u64, u64), Poly>,
}

impl Laplace<'_> {
    fn det(&mut self, rows: u64, cols: u64) -> Poly {
        if let Some(d) = self.memo.get(&(rows, cols)) {
            return d.clone();
        }
        let r0 = rows.trailing_zeros() as usize;
        let d = if rows.count_ones() == 1 {
            self.m[r0][cols.trailing_zeros() as usize].clone()
        } else {
            let rest = rows & !(1 << r0);
            let mut acc = Poly::zero(self.ring);
            let mut c_bits = cols;
            let mut sign_pos = true;
            while c_bits != 0 {
                let c = c_bits.trailing_zeros() as usize;
                c_bits &= c_bits - 1;
                let entry = &self.m[r0][c];
                if !entry.is_zero() {
                    let sub = self.det(rest, cols & !(1 << c));
                    if !sub.is_zero() {
                        let term = entry * &sub;
                        acc = if sign_pos { &acc + &term } else { &acc - &term };
                    }
                }
                sign_pos = !sign_pos;
            }
            acc
        };
        self.memo.insert((rows, cols), d.clone());
        d
    }
}

/// All `k × k` minors of `m` (rows of polynomials over `ring`), ordered by
/// row subset, then column subset, lexicographically.
pub fn minors(ring: &RingRef, m: &[Vec<Poly>], k: usize) -> Vec<Poly> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    assert!(rows <= 64 && cols <= 64, "matrix too large for bitmask minors");
    let mut lap = Laplace {
        ring,
        m,
        memo: HashMap::new(),
    };
    let row_sets = subsets(rows, k);
    let col_sets = subsets(cols, k);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for &r in &row_sets {
        for &c in &col_sets {
            out.push(lap.det(r, c));
        }
    }
    out
}
