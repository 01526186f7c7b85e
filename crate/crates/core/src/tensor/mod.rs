//! Order-3 tensors, flattenings, the matrices of linear forms they define,
//! minors, and the Strassen flattening.

mod minors;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use minors::minors;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::poly::{span_dim, MonomialOrder, Poly, Ring, RingRef};
use crate::scalar::{Field, Scalar};

/// Dense tensor in `V1 ⊗ V2 ⊗ V3`, entry `(i, j, k)` being the coefficient
/// of `a_i ⊗ b_j ⊗ c_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dims: [usize; 3],
    field: Field,
    entries: Vec<Scalar>,
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3{:?}[{}]", self.dims, self.field)?;
        let terms: Vec<String> = self
            .nonzero_entries()
            .map(|(i, j, k, v)| format!("{v}*a{i}b{j}c{k}"))
            .collect();
        write!(f, "({})", terms.join(" + "))
    }
}

impl Tensor3 {
    pub fn zeros(dims: [usize; 3], field: Field) -> Self {
        assert!(dims.iter().all(|&d| d > 0), "tensor dimensions must be positive");
        Tensor3 {
            dims,
            field,
            entries: vec![field.zero(); dims[0] * dims[1] * dims[2]],
        }
    }

    /// Builds a tensor from `(i, j, k, value)` terms; repeated indices add up.
    pub fn from_terms(dims: [usize; 3], field: Field, terms: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut t = Tensor3::zeros(dims, field);
        for (i, j, k, v) in terms {
            if *i >= dims[0] || *j >= dims[1] || *k >= dims[2] {
                return Err(Error::Parse(format!("index ({i},{j},{k}) outside {dims:?}")));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(v.field().to_string(), field.to_string()));
            }
            let idx = t.index(*i, *j, *k);
            t.entries[idx] = &t.entries[idx] + v;
        }
        Ok(t)
    }

    /// Sum of `c * a_i ⊗ b_j ⊗ c_k` over integer-coefficient terms.
    pub fn from_int_terms(dims: [usize; 3], field: Field, terms: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let t: Vec<_> = terms.iter().map(|&(i, j, k, v)| (i, j, k, field.from_i64(v))).collect();
        Tensor3::from_terms(dims, field, &t)
    }

    /// The unit tensor `sum_i a_i ⊗ b_i ⊗ c_i`.
    pub fn unit(n: usize, field: Field) -> Self {
        let terms: Vec<_> = (0..n).map(|i| (i, i, i, 1)).collect();
        Tensor3::from_int_terms([n; 3], field, &terms).unwrap()
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.index(i, j, k);
        self.entries[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries in `(i, j, k)` lexicographic order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let [_, n2, n3] = self.dims;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n2 * n3), (idx / n3) % n2, idx % n3, v))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 {
            dims: self.dims,
            field: self.field,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    /// Maps a rational tensor into another field (identity for the same
    /// field).
    pub fn to_field(&self, field: Field) -> Result<Tensor3> {
        if field == self.field {
            return Ok(self.clone());
        }
        let entries = self
            .entries
            .iter()
            .map(|v| match v {
                Scalar::Rational(q) => field.from_rational(q),
                _ => Err(Error::FieldMismatch(self.field.to_string(), field.to_string())),
            })
            .collect::<Result<_>>()?;
        Ok(Tensor3 {
            dims: self.dims,
            field,
            entries,
        })
    }

    /// Reorders the factors: factor `a` of the result is factor `perm[a]`
    /// of `self`.
    pub fn permute(&self, perm: [usize; 3]) -> Tensor3 {
        let dims = [self.dims[perm[0]], self.dims[perm[1]], self.dims[perm[2]]];
        let mut out = Tensor3::zeros(dims, self.field);
        for (i, j, k, v) in self.nonzero_entries() {
            let old = [i, j, k];
            out.set(old[perm[0]], old[perm[1]], old[perm[2]], v.clone());
        }
        out
    }

    /// Exchanges the second and third factors.
    pub fn swap23(&self) -> Tensor3 {
        self.permute([0, 2, 1])
    }

    /// Flattening on `factor` (1-based): row `i` is the slice with index `i`
    /// in that factor, vectorized with the later remaining factor as the
    /// fast index.
    pub fn flattening(&self, factor: usize) -> Result<Matrix> {
        let perm = factor_first(factor)?;
        let t = self.permute(perm);
        let [n, a, b] = t.dims;
        let mut m = Matrix::zeros(self.field, n, a * b);
        for (i, j, k, v) in t.nonzero_entries() {
            m.set(i, j * b + k, v.clone());
        }
        Ok(m)
    }

    pub fn flattening_ranks(&self) -> [usize; 3] {
        [1, 2, 3].map(|f| self.flattening(f).unwrap().rank())
    }

    pub fn is_concise(&self) -> bool {
        self.flattening_ranks() == self.dims
    }

    /// Changes bases so that the tensor lives on the leading `r_i`
    /// coordinates of each factor and returns that core.
    pub fn concise_reduce(&self) -> Result<ConciseReduction> {
        if self.is_zero() {
            return Err(Error::ZeroTensor);
        }
        let mut t = self.clone();
        let mut cut = [false; 3];
        for f in 1..=3 {
            let perm = factor_first(f)?;
            let moved = t.permute(perm);
            let basis = moved.flattening(1)?.row_space_basis();
            if basis.len() == moved.dims[0] {
                continue;
            }
            cut[f - 1] = true;
            let dims = [basis.len(), moved.dims[1], moved.dims[2]];
            let core = Tensor3 {
                dims,
                field: self.field,
                entries: basis.into_iter().flatten().collect(),
            };
            t = core.permute(inverse(perm));
        }
        Ok(ConciseReduction {
            ranks: t.dims,
            tensor: t,
            cut,
        })
    }

    /// The matrix of linear forms of `factor` (1-based). Factor 1 gives the
    /// `n2 × n3` matrix with entries `sum_i T_ijk x_i`; factor 2 the
    /// `n3 × n1` matrix with entries `sum_j T_ijk x_j`; factor 3 the
    /// `n1 × n2` matrix with entries `sum_k T_ijk x_k`.
    pub fn linear_matrix(&self, factor: usize) -> Result<LinearFormMatrix> {
        // factor 1: (x, row, col) = (i, j, k); 2: (j, k, i); 3: (k, i, j)
        let perm = match factor {
            1 => [0, 1, 2],
            2 => [1, 2, 0],
            3 => [2, 0, 1],
            _ => return Err(Error::OutOfRange(format!("factor {factor}"))),
        };
        let t = self.permute(perm);
        let [n, rows, cols] = t.dims;
        let ring = Ring::new(n, self.field, MonomialOrder::Grevlex);
        let mut coeffs = vec![vec![self.field.zero(); n]; rows * cols];
        for (x, r, c, v) in t.nonzero_entries() {
            coeffs[r * cols + c][x] = v.clone();
        }
        let entries = coeffs.iter().map(|c| Poly::linear(&ring, c)).collect();
        Ok(LinearFormMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    /// Strassen flattening `V1 ⊗ V2* → Λ²V1 ⊗ V3` of a 3×3×3 tensor.
    pub fn strassen_flattening(&self) -> Result<StrassenMatrix> {
        if self.dims != [3, 3, 3] {
            return Err(Error::WrongDims {
                expected: [3, 3, 3],
                got: self.dims,
            });
        }
        let pair_index = |p: usize, q: usize| match (p, q) {
            (0, 1) => 0,
            (0, 2) => 1,
            (1, 2) => 2,
            _ => unreachable!(),
        };
        let mut m = Matrix::zeros(self.field, 9, 9);
        // column (i, j) is a_i ⊗ β_j, sent to sum_{p,r} T_pjr (a_i ∧ a_p) ⊗ c_r
        for i in 0..3 {
            for (p, j, r, v) in self.nonzero_entries() {
                if p == i {
                    continue;
                }
                let (row_pair, sign) = if i < p { (pair_index(i, p), 1) } else { (pair_index(p, i), -1) };
                let row = row_pair * 3 + r;
                let col = i * 3 + j;
                let delta = if sign > 0 { v.clone() } else { -v };
                let cur = m.get(row, col) + &delta;
                m.set(row, col, cur);
            }
        }
        let rank = m.rank();
        Ok(StrassenMatrix { matrix: m, rank })
    }

    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            dims: self.dims,
            field: self.field,
            entries: self
                .nonzero_entries()
                .map(|(i, j, k, v)| EntryJson { i, j, k, v: v.to_string() })
                .collect(),
        }
    }

    pub fn from_json(json: &TensorJson) -> Result<Tensor3> {
        if json.dims.contains(&0) {
            return Err(Error::Parse(format!("dimensions {:?} must be positive", json.dims)));
        }
        let terms = json
            .entries
            .iter()
            .map(|e| Ok((e.i, e.j, e.k, json.field.parse_scalar(&e.v)?)))
            .collect::<Result<Vec<_>>>()?;
        Tensor3::from_terms(json.dims, json.field, &terms)
    }

    pub fn parse_json(text: &str) -> Result<Tensor3> {
        let json: TensorJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Tensor3::from_json(&json)
    }
}

fn factor_first(factor: usize) -> Result<[usize; 3]> {
    match factor {
        1 => Ok([0, 1, 2]),
        2 => Ok([1, 0, 2]),
        3 => Ok([2, 0, 1]),
        _ => Err(Error::OutOfRange(format!("factor {factor}"))),
    }
}

fn inverse(perm: [usize; 3]) -> [usize; 3] {
    let mut inv = [0; 3];
    for (a, &p) in perm.iter().enumerate() {
        inv[p] = a;
    }
    inv
}

/// Serialized tensor: zero entries omitted, indices 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub dims: [usize; 3],
    pub field: Field,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub v: String,
}

/// Result of [`Tensor3::concise_reduce`].
#[derive(Debug, Clone)]
pub struct ConciseReduction {
    pub tensor: Tensor3,
    /// Which factors were cut down.
    pub cut: [bool; 3],
    /// Flattening ranks, equal to the dimensions of the core.
    pub ranks: [usize; 3],
}

/// The 9×9 Strassen matrix and its rank.
#[derive(Debug, Clone)]
pub struct StrassenMatrix {
    pub matrix: Matrix,
    pub rank: usize,
}

/// Matrix whose entries are linear forms in `x0..x_{n-1}`.
#[derive(Debug, Clone)]
pub struct LinearFormMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl LinearFormMatrix {
    /// Builds a matrix from rows of polynomials over `ring`.
    pub fn from_rows(ring: &RingRef, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| !crate::poly::same_ring(e.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(LinearFormMatrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn rows(&self) -> Vec<Vec<Poly>> {
        self.entries.chunks(self.cols.max(1)).map(<[Poly]>::to_vec).collect()
    }

    pub fn transpose(&self) -> LinearFormMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        LinearFormMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Converts back to a tensor with `n = nvars` as first dimension.
    pub fn to_tensor(&self) -> Result<Tensor3> {
        let n = self.ring.nvars();
        let field = self.ring.field();
        let mut t = Tensor3::zeros([n, self.rows.max(1), self.cols.max(1)], field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                for (m, v) in self.get(r, c).terms() {
                    if m.degree() != 1 {
                        return Err(Error::NotHomogeneous);
                    }
                    let x = m.exponents().iter().position(|&e| e == 1).unwrap();
                    t.set(x, r, c, v.clone());
                }
            }
        }
        Ok(t)
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::BadMinorSize {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// All `k × k` minors, ordered by row subset then column subset in
    /// lexicographic order.
    pub fn minor_list(&self, k: usize) -> Result<Vec<Poly>> {
        self.check_k(k)?;
        Ok(minors(&self.ring, &self.rows(), k))
    }

    /// The minors together with the ideal they generate.
    pub fn minor_ideal(&self, k: usize) -> Result<(Ideal, Vec<Poly>)> {
        let list = self.minor_list(k)?;
        let ideal = Ideal::new(&self.ring, list.clone())?;
        Ok((ideal, list))
    }

    /// Dimension of the linear span of the `k × k` minors.
    pub fn minor_span_dim(&self, k: usize) -> Result<usize> {
        Ok(span_dim(&self.ring, &self.minor_list(k)?))
    }
}

impl fmt::Display for LinearFormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
