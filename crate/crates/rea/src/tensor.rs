//! Dense exact linear algebra on tensor-product spaces.
//!
//! [`QMatrix`] is a dense matrix over [`LaurentRational`] carrying an ordered
//! list of factor dimensions for its rows and columns. Composite indices are
//! lexicographic with factor 1 leftmost (most significant); the lower index
//! enumerates rows, the upper one columns.
//!
//! The module provides Kronecker embeddings, partial traces, R-matrix chains,
//! exact rank over the rational-function field (fraction-free elimination),
//! and exact linear solving with canonical echelon solutions.

use crate::scalar::{LaurentPoly, LaurentRational};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors from shape-sensitive tensor operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    /// Embedding position out of range.
    PositionOutOfRange,
    /// Row/column factor dimensions do not match where required.
    FactorMismatch,
    /// A matrix that must be invertible is singular.
    Singular,
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::PositionOutOfRange => write!(f, "embedding position out of range"),
            TensorError::FactorMismatch => write!(f, "factor dimension mismatch"),
            TensorError::Singular => write!(f, "matrix is singular"),
        }
    }
}

impl std::error::Error for TensorError {}

/// Dense matrix over the scalar field with tensor-shape metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    row_shape: Vec<usize>,
    col_shape: Vec<usize>,
    entries: Vec<LaurentRational>,
}

impl QMatrix {
    pub fn zeros(row_shape: Vec<usize>, col_shape: Vec<usize>) -> Self {
        let n = row_shape.iter().product::<usize>() * col_shape.iter().product::<usize>();
        QMatrix {
            row_shape,
            col_shape,
            entries: vec![LaurentRational::zero(); n],
        }
    }

    /// Identity operator on the tensor space described by `shape`.
    pub fn identity(shape: Vec<usize>) -> Self {
        let n: usize = shape.iter().product();
        let mut m = Self::zeros(shape.clone(), shape);
        for i in 0..n {
            m.entries[i * n + i] = LaurentRational::one();
        }
        m
    }

    pub fn from_fn(
        row_shape: Vec<usize>,
        col_shape: Vec<usize>,
        f: impl Fn(usize, usize) -> LaurentRational,
    ) -> Self {
        let nr: usize = row_shape.iter().product();
        let nc: usize = col_shape.iter().product();
        let mut entries = Vec::with_capacity(nr * nc);
        for i in 0..nr {
            for j in 0..nc {
                entries.push(f(i, j));
            }
        }
        QMatrix {
            row_shape,
            col_shape,
            entries,
        }
    }

    /// Parse a rectangular table of scalar strings as a single-factor matrix.
    pub fn from_str_rows(rows: &[Vec<&str>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nr * nc);
        for r in rows {
            assert_eq!(r.len(), nc, "ragged rows");
            for s in r {
                entries.push(LaurentRational::parse(s).expect("bad scalar literal"));
            }
        }
        QMatrix {
            row_shape: vec![nr],
            col_shape: vec![nc],
            entries,
        }
    }

    /// The permutation operator P on V (x) V: `P[(a,i),(b,j)] = d(a,j) d(i,b)`.
    pub fn permutation(n: usize) -> Self {
        let mut m = Self::zeros(vec![n, n], vec![n, n]);
        for a in 0..n {
            for b in 0..n {
                m.set(a * n + b, b * n + a, LaurentRational::one());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.row_shape.iter().product()
    }

    pub fn ncols(&self) -> usize {
        self.col_shape.iter().product()
    }

    pub fn row_shape(&self) -> &[usize] {
        &self.row_shape
    }

    pub fn col_shape(&self) -> &[usize] {
        &self.col_shape
    }

    pub fn at(&self, i: usize, j: usize) -> &LaurentRational {
        &self.entries[i * self.ncols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentRational) {
        let nc = self.ncols();
        self.entries[i * nc + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    /// Reinterpret the factor structure without touching entries.
    pub fn reshaped(mut self, row_shape: Vec<usize>, col_shape: Vec<usize>) -> Self {
        assert_eq!(self.nrows(), row_shape.iter().product::<usize>());
        assert_eq!(self.ncols(), col_shape.iter().product::<usize>());
        self.row_shape = row_shape;
        self.col_shape = col_shape;
        self
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nrows(), rhs.nrows());
        assert_eq!(self.ncols(), rhs.ncols());
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        QMatrix {
            row_shape: self.row_shape.clone(),
            col_shape: self.col_shape.clone(),
            entries,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.nrows(), rhs.nrows());
        assert_eq!(self.ncols(), rhs.ncols());
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        QMatrix {
            row_shape: self.row_shape.clone(),
            col_shape: self.col_shape.clone(),
            entries,
        }
    }

    pub fn neg(&self) -> Self {
        QMatrix {
            row_shape: self.row_shape.clone(),
            col_shape: self.col_shape.clone(),
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentRational) -> Self {
        QMatrix {
            row_shape: self.row_shape.clone(),
            col_shape: self.col_shape.clone(),
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Matrix product. Zero entries are skipped, which matters a lot here:
    /// R-chains and projectors are mostly zeros.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (m, kdim, n) = (self.nrows(), self.ncols(), rhs.ncols());
        assert_eq!(kdim, rhs.nrows(), "inner dimension mismatch");
        let mut out = vec![LaurentRational::zero(); m * n];
        for i in 0..m {
            for l in 0..kdim {
                let a = &self.entries[i * kdim + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[l * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out[idx] = &out[idx] + &(a * b);
                }
            }
        }
        QMatrix {
            row_shape: self.row_shape.clone(),
            col_shape: rhs.col_shape.clone(),
            entries: out,
        }
    }

    /// Kronecker product; factor lists concatenate.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (ra, ca) = (self.nrows(), self.ncols());
        let (rb, cb) = (rhs.nrows(), rhs.ncols());
        let mut row_shape = self.row_shape.clone();
        row_shape.extend_from_slice(&rhs.row_shape);
        let mut col_shape = self.col_shape.clone();
        col_shape.extend_from_slice(&rhs.col_shape);
        let mut entries = vec![LaurentRational::zero(); ra * rb * ca * cb];
        let ncols = ca * cb;
        for ia in 0..ra {
            for ja in 0..ca {
                let a = self.at(ia, ja);
                if a.is_zero() {
                    continue;
                }
                for ib in 0..rb {
                    for jb in 0..cb {
                        let b = rhs.at(ib, jb);
                        if b.is_zero() {
                            continue;
                        }
                        entries[(ia * rb + ib) * ncols + (ja * cb + jb)] = a * b;
                    }
                }
            }
        }
        QMatrix {
            row_shape,
            col_shape,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let (m, n) = (self.nrows(), self.ncols());
        let mut entries = Vec::with_capacity(m * n);
        for j in 0..n {
            for i in 0..m {
                entries.push(self.entries[i * n + j].clone());
            }
        }
        QMatrix {
            row_shape: self.col_shape.clone(),
            col_shape: self.row_shape.clone(),
            entries,
        }
    }

    /// Transpose only the leading `nfactors` factors, leaving the rest of the
    /// tensor indices in place. Requires the transposed factors to have equal
    /// row/column dimensions.
    pub fn partial_transpose_leading(&self, nfactors: usize) -> Self {
        assert!(nfactors <= self.row_shape.len() && nfactors <= self.col_shape.len());
        let head_r: usize = self.row_shape[..nfactors].iter().product();
        let head_c: usize = self.col_shape[..nfactors].iter().product();
        assert_eq!(
            head_r, head_c,
            "partial transpose needs square leading block"
        );
        let tail_r: usize = self.row_shape[nfactors..].iter().product();
        let tail_c: usize = self.col_shape[nfactors..].iter().product();
        let ncols = self.ncols();
        let mut out = Self::zeros(self.row_shape.clone(), self.col_shape.clone());
        for a in 0..head_r {
            for b in 0..head_c {
                for x in 0..tail_r {
                    for y in 0..tail_c {
                        let src = (a * tail_r + x) * ncols + (b * tail_c + y);
                        if self.entries[src].is_zero() {
                            continue;
                        }
                        let dst = (b * tail_r + x) * ncols + (a * tail_c + y);
                        out.entries[dst] = self.entries[src].clone();
                    }
                }
            }
        }
        out
    }

    /// Trace over all indices.
    pub fn trace(&self) -> LaurentRational {
        assert!(self.is_square());
        let n = self.nrows();
        let mut acc = LaurentRational::zero();
        for i in 0..n {
            acc = &acc + self.at(i, i);
        }
        acc
    }

    /// Contract the `s`-th (1-based) row factor against the `s`-th column
    /// factor; the shape loses that factor.
    pub fn partial_trace(&self, s: usize) -> Result<Self, TensorError> {
        if s == 0 || s > self.row_shape.len() || s > self.col_shape.len() {
            return Err(TensorError::FactorMismatch);
        }
        let idx = s - 1;
        let d = self.row_shape[idx];
        if self.col_shape[idx] != d {
            return Err(TensorError::FactorMismatch);
        }
        let pre_r: usize = self.row_shape[..idx].iter().product();
        let post_r: usize = self.row_shape[idx + 1..].iter().product();
        let pre_c: usize = self.col_shape[..idx].iter().product();
        let post_c: usize = self.col_shape[idx + 1..].iter().product();
        let mut row_shape = self.row_shape.clone();
        row_shape.remove(idx);
        let mut col_shape = self.col_shape.clone();
        col_shape.remove(idx);
        let ncols = self.ncols();
        let mut out = Self::zeros(row_shape, col_shape);
        let out_cols = pre_c * post_c;
        for a in 0..pre_r {
            for x in 0..post_r {
                for b in 0..pre_c {
                    for y in 0..post_c {
                        let mut acc = LaurentRational::zero();
                        for t in 0..d {
                            let i = (a * d + t) * post_r + x;
                            let j = (b * d + t) * post_c + y;
                            let e = &self.entries[i * ncols + j];
                            if !e.is_zero() {
                                acc = &acc + e;
                            }
                        }
                        out.entries[(a * post_r + x) * out_cols + (b * post_c + y)] = acc;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker embedding of `self` into factors `i .. i+m-1` of a k-fold
    /// tensor power of an n-dimensional space, identity elsewhere (1-based).
    pub fn embed_at(&self, i: usize, k: usize, n: usize) -> Result<Self, TensorError> {
        let m = self.row_shape.len();
        assert_eq!(m, self.col_shape.len());
        if i == 0 || i + m - 1 > k {
            return Err(TensorError::PositionOutOfRange);
        }
        let mut out = if i > 1 {
            QMatrix::identity(vec![n; i - 1]).kron(self)
        } else {
            self.clone()
        };
        let right = k - (i + m - 1);
        if right > 0 {
            out = out.kron(&QMatrix::identity(vec![n; right]));
        }
        Ok(out)
    }

    /// Place the factors of `self` at the listed (1-based, distinct, not
    /// necessarily adjacent) positions of a k-fold tensor power of an
    /// n-dimensional space, identity elsewhere.
    pub fn embed_at_positions(
        &self,
        positions: &[usize],
        k: usize,
        n: usize,
    ) -> Result<Self, TensorError> {
        let m = self.row_shape.len();
        if positions.len() != m {
            return Err(TensorError::FactorMismatch);
        }
        if positions.iter().any(|&p| p == 0 || p > k) {
            return Err(TensorError::PositionOutOfRange);
        }
        let mut seen = vec![false; k + 1];
        for &p in positions {
            if seen[p] {
                return Err(TensorError::PositionOutOfRange);
            }
            seen[p] = true;
        }
        if self.row_shape.iter().any(|&d| d != n) || self.col_shape.iter().any(|&d| d != n) {
            return Err(TensorError::FactorMismatch);
        }
        let rest: Vec<usize> = (1..=k).filter(|p| !positions.contains(p)).collect();
        let rest_dim = n.pow(rest.len() as u32);
        let stride = |f: usize| n.pow((k - f) as u32);
        let (sr, sc) = (self.nrows(), self.ncols());
        let mut out = Self::zeros(vec![n; k], vec![n; k]);
        let ncols = out.ncols();
        for a in 0..sr {
            for b in 0..sc {
                let e = self.at(a, b);
                if e.is_zero() {
                    continue;
                }
                // scatter the factor indices of (a, b) to `positions`
                let mut base_row = 0usize;
                let mut base_col = 0usize;
                let (mut aa, mut bb) = (a, b);
                for (fi, &pos) in positions.iter().enumerate().rev() {
                    base_row += (aa % n) * stride(pos);
                    base_col += (bb % n) * stride(pos);
                    aa /= n;
                    bb /= n;
                    let _ = fi;
                }
                for r in 0..rest_dim {
                    let mut off = 0usize;
                    let mut rr = r;
                    for &pos in rest.iter().rev() {
                        off += (rr % n) * stride(pos);
                        rr /= n;
                    }
                    out.entries[(base_row + off) * ncols + (base_col + off)] = e.clone();
                }
            }
        }
        Ok(out)
    }

    /// Inverse via exact elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.nrows();
        let id = QMatrix::identity(vec![n]);
        let sol = solve_linear(self, &id)?;
        // solve_linear returns a canonical solution; for invertibility the
        // system must be uniquely solvable, i.e. full rank.
        if rank_exact(self) != n {
            return None;
        }
        Some(sol.reshaped(self.col_shape.clone(), self.row_shape.clone()))
    }

    /// Power with nonnegative exponent.
    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = QMatrix::identity_like(self);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn identity_like(m: &Self) -> Self {
        QMatrix::identity(m.row_shape.clone())
    }
}

// ---- chains of R-matrices ----

/// The chain `R^(sign)_(i -> j)` acting on k tensor factors: the ordered
/// product `R_i R_(i+1) ... R_j` for `i < j`, `R_i R_(i-1) ... R_j` for
/// `i > j`, and the single `R_i` for `i = j`, where `R_s` acts on factors
/// `(s, s+1)`.
pub fn r_chain(
    r: &QMatrix,
    i: usize,
    j: usize,
    sign: i32,
    k: usize,
) -> Result<QMatrix, TensorError> {
    if sign >= 0 {
        r_chain_from(r, i, j, k)
    } else {
        let inv = r.inverse().ok_or(TensorError::Singular)?;
        let inv = inv.reshaped(r.col_shape().to_vec(), r.row_shape().to_vec());
        r_chain_from(&inv, i, j, k)
    }
}

/// Same chain with the step matrix passed directly (callers with a cached
/// inverse avoid re-inverting).
pub fn r_chain_from(rm: &QMatrix, i: usize, j: usize, k: usize) -> Result<QMatrix, TensorError> {
    let n = rm.row_shape()[0];
    if i == 0 || j == 0 || i > k - 1 || j > k - 1 {
        return Err(TensorError::PositionOutOfRange);
    }
    let step: &dyn Fn(usize) -> usize = if i <= j { &|s| i + s } else { &|s| i - s };
    let len = i.abs_diff(j) + 1;
    let mut acc = rm.embed_at(step(0), k, n)?;
    for s in 1..len {
        acc = acc.mul(&rm.embed_at(step(s), k, n)?);
    }
    Ok(acc)
}

// ---- exact elimination ----

/// Rank over the rational-function field via fraction-free (Bareiss-style)
/// elimination on denominator-cleared rows. Pivot choice is the first
/// nonzero entry in column order, so the result is deterministic.
pub fn rank_exact(m: &QMatrix) -> usize {
    let (nr, nc) = (m.nrows(), m.ncols());
    if nr == 0 || nc == 0 {
        return 0;
    }
    // clear denominators row by row
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(nr);
    for i in 0..nr {
        let mut lcm = LaurentPoly::one();
        for j in 0..nc {
            lcm = simple_lcm(&lcm, m.at(i, j).den());
        }
        let row = (0..nc)
            .map(|j| {
                let e = m.at(i, j);
                let cof = LaurentRational::new(lcm.clone(), e.den().clone());
                debug_assert!(cof.den().is_one());
                e.num().mul(cof.num())
            })
            .collect();
        rows.push(row);
    }
    bareiss_rank(&mut rows, nr, nc)
}

fn simple_lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    // a/gcd(a,b) * b; the reduction of the fraction a/b exposes the gcd
    let red = LaurentRational::new(a.clone(), b.clone());
    red.num().mul(b)
}

fn bareiss_rank(rows: &mut [Vec<LaurentPoly>], nr: usize, nc: usize) -> usize {
    let mut rank = 0;
    let mut prev = LaurentPoly::one();
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let pivot_row = (rank..nr).find(|&r| !rows[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        rows.swap(rank, pr);
        for r in rank + 1..nr {
            for c in col + 1..nc {
                let t = rows[rank][col]
                    .mul(&rows[r][c])
                    .sub(&rows[r][col].mul(&rows[rank][c]));
                rows[r][c] = exact_poly_div(&t, &prev);
            }
            rows[r][col] = LaurentPoly::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Exact division of Laurent polynomials (the Bareiss identity guarantees
/// divisibility).
fn exact_poly_div(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    if b.is_one() {
        return a.clone();
    }
    let q = LaurentRational::new(a.clone(), b.clone());
    assert!(q.den().is_one(), "Bareiss division not exact");
    q.num().clone()
}

/// Reduced row echelon form over the field; returns (rref, pivot columns).
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (nr, nc) = (a.nrows(), a.ncols());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..nc {
        if row == nr {
            break;
        }
        let Some(pr) = (row..nr).find(|&r| !a.at(r, col).is_zero()) else {
            continue;
        };
        if pr != row {
            for c in 0..nc {
                let tmp = a.at(pr, c).clone();
                let cur = a.at(row, c).clone();
                a.set(pr, c, cur);
                a.set(row, c, tmp);
            }
        }
        let inv = a.at(row, col).inverse().expect("pivot is nonzero");
        for c in col..nc {
            let v = a.at(row, c) * &inv;
            a.set(row, c, v);
        }
        for r in 0..nr {
            if r == row || a.at(r, col).is_zero() {
                continue;
            }
            let f = a.at(r, col).clone();
            for c in col..nc {
                let v = a.at(r, c) - &(&f * a.at(row, c));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Exact solution X of `A X = rhs`, or `None` when inconsistent. When the
/// solution space is positive-dimensional, the canonical solution from the
/// reduced echelon form (free variables zero) is returned.
pub fn solve_linear(a: &QMatrix, rhs: &QMatrix) -> Option<QMatrix> {
    assert_eq!(a.nrows(), rhs.nrows(), "inconsistent dimensions");
    let (nr, nc) = (a.nrows(), a.ncols());
    let rc = rhs.ncols();
    let aug = QMatrix::from_fn(vec![nr], vec![nc + rc], |i, j| {
        if j < nc {
            a.at(i, j).clone()
        } else {
            rhs.at(i, j - nc).clone()
        }
    });
    let (r, pivots) = rref(&aug);
    // inconsistent iff a pivot lands in the rhs block
    if pivots.iter().any(|&c| c >= nc) {
        return None;
    }
    let mut x = QMatrix::zeros(vec![nc], vec![rc]);
    for (row, &col) in pivots.iter().enumerate() {
        for j in 0..rc {
            x.set(col, j, r.at(row, nc + j).clone());
        }
    }
    Some(x)
}

/// Basis of the right nullspace of `A` (canonical RREF parametrization).
pub fn nullspace(a: &QMatrix) -> Vec<Vec<LaurentRational>> {
    let (r, pivots) = rref(a);
    let nc = a.ncols();
    let free: Vec<usize> = (0..nc).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![LaurentRational::zero(); nc];
        v[fc] = LaurentRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.at(row, fc);
        }
        basis.push(v);
    }
    basis
}

// ---- serialization ----

/// JSON shape of a [`QMatrix`]: scalar strings in row-major order.
#[derive(Serialize, Deserialize)]
pub struct QMatrixJson {
    pub shape_rows: Vec<usize>,
    pub shape_cols: Vec<usize>,
    pub entries: Vec<String>,
}

impl QMatrix {
    pub fn to_json(&self) -> QMatrixJson {
        QMatrixJson {
            shape_rows: self.row_shape.clone(),
            shape_cols: self.col_shape.clone(),
            entries: self.entries.iter().map(|e| e.to_string()).collect(),
        }
    }

    pub fn from_json(j: &QMatrixJson) -> Result<Self, crate::scalar::ScalarError> {
        let entries = j
            .entries
            .iter()
            .map(|s| LaurentRational::parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QMatrix {
            row_shape: j.shape_rows.clone(),
            col_shape: j.shape_cols.clone(),
            entries,
        })
    }
}

/// Specialize every entry at a rational point (used by rank cross-checks).
pub fn specialize_matrix(
    m: &QMatrix,
    q0: &num_rational::BigRational,
) -> Result<Vec<Vec<num_rational::BigRational>>, crate::scalar::ScalarError> {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut out = Vec::with_capacity(nr);
    for i in 0..nr {
        let mut row = Vec::with_capacity(nc);
        for j in 0..nc {
            row.push(m.at(i, j).specialize(q0, false)?);
        }
        out.push(row);
    }
    Ok(out)
}

/// Rank of a rational matrix (oracle for specialization cross-checks).
pub fn rank_rational(rows: &[Vec<num_rational::BigRational>]) -> usize {
    use num_traits::Zero;
    let mut m: Vec<Vec<num_rational::BigRational>> = rows.to_vec();
    let nr = m.len();
    if nr == 0 {
        return 0;
    }
    let nc = m[0].len();
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(pr) = (rank..nr).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].recip();
        for r in rank + 1..nr {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() * &inv;
            for c in col..nc {
                let v = m[rank][c].clone() * &f;
                m[r][c] -= v;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentRational as LR;

    fn lr(s: &str) -> LR {
        LR::parse(s).unwrap()
    }

    /// 4x4 U_q(sl2) R-matrix, used here only as a handy nontrivial operand.
    fn rmat() -> QMatrix {
        QMatrix::from_str_rows(&[
            vec!["q", "0", "0", "0"],
            vec!["0", "q - q^-1", "1", "0"],
            vec!["0", "1", "0", "0"],
            vec!["0", "0", "0", "q"],
        ])
        .reshaped(vec![2, 2], vec![2, 2])
    }

    #[test]
    fn embed_no_padding_is_identity_map() {
        let r = rmat();
        assert_eq!(r.embed_at(1, 2, 2).unwrap(), r);
    }

    #[test]
    fn embed_identity_stays_identity() {
        let id = QMatrix::identity(vec![2]);
        for pos in 1..=3 {
            assert_eq!(
                id.embed_at(pos, 3, 2).unwrap(),
                QMatrix::identity(vec![2; 3])
            );
        }
    }

    #[test]
    fn embed_matches_direct_kronecker() {
        // I (x) R against the direct 8x8 Kronecker construction
        let r = rmat();
        let direct = QMatrix::identity(vec![2]).kron(&r);
        assert_eq!(r.embed_at(2, 3, 2).unwrap(), direct);
    }

    #[test]
    fn embed_position_out_of_range() {
        let r = rmat();
        assert_eq!(r.embed_at(3, 3, 2), Err(TensorError::PositionOutOfRange));
        assert_eq!(r.embed_at(0, 3, 2), Err(TensorError::PositionOutOfRange));
    }

    #[test]
    fn embed_is_multiplicative() {
        let r = rmat();
        let r2 = r.mul(&r);
        let lhs = r2.embed_at(2, 3, 2).unwrap();
        let rhs = r
            .embed_at(2, 3, 2)
            .unwrap()
            .mul(&r.embed_at(2, 3, 2).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_trace_of_permutation() {
        for n in [2usize, 3] {
            let p = QMatrix::permutation(n);
            let t = p.partial_trace(2).unwrap();
            assert_eq!(t, QMatrix::identity(vec![n]));
        }
    }

    #[test]
    fn partial_trace_of_identity_counts_dimension() {
        let id = QMatrix::identity(vec![2, 2]);
        let t = id.partial_trace(1).unwrap();
        assert_eq!(t, QMatrix::identity(vec![2]).scale(&lr("2")));
    }

    #[test]
    fn partial_trace_inserted_identity_scales() {
        // Tr_s (M (x) I_s) = n * M with the identity in the last slot
        let r = rmat();
        let m = r.kron(&QMatrix::identity(vec![2]));
        assert_eq!(m.partial_trace(3).unwrap(), r.scale(&lr("2")));
    }

    #[test]
    fn partial_trace_shape_errors() {
        let m = QMatrix::zeros(vec![2, 3], vec![2, 2]);
        assert!(m.partial_trace(2).is_err());
        assert!(m.partial_trace(5).is_err());
    }

    #[test]
    fn chain_single_and_ordered_product() {
        let r = rmat();
        // i = j: the chain is R itself
        assert_eq!(r_chain(&r, 1, 1, 1, 2).unwrap(), r);
        // i=1, j=3, k=4: R_1 R_2 R_3, checked against step-by-step products
        let chain = r_chain(&r, 1, 3, 1, 4).unwrap();
        let step = r
            .embed_at(1, 4, 2)
            .unwrap()
            .mul(&r.embed_at(2, 4, 2).unwrap())
            .mul(&r.embed_at(3, 4, 2).unwrap());
        assert_eq!(chain, step);
        // descending chain R_3 R_2 R_1
        let chain_down = r_chain(&r, 3, 1, 1, 4).unwrap();
        let step_down = r
            .embed_at(3, 4, 2)
            .unwrap()
            .mul(&r.embed_at(2, 4, 2).unwrap())
            .mul(&r.embed_at(1, 4, 2).unwrap());
        assert_eq!(chain_down, step_down);
    }

    #[test]
    fn embed_at_positions_matches_adjacent_embed() {
        let r = rmat();
        assert_eq!(
            r.embed_at_positions(&[2, 3], 4, 2).unwrap(),
            r.embed_at(2, 4, 2).unwrap()
        );
        // non-adjacent placement via permutation conjugation: R_13 = P_23 R_12 P_23
        let p23 = QMatrix::permutation(2).embed_at(2, 3, 2).unwrap();
        let r13 = p23.mul(&r.embed_at(1, 3, 2).unwrap()).mul(&p23);
        assert_eq!(r.embed_at_positions(&[1, 3], 3, 2).unwrap(), r13);
        // swapped positions transpose the roles of the two factors
        let p12 = QMatrix::permutation(2).embed_at(1, 3, 2).unwrap();
        let r21 = p12.mul(&r.embed_at(1, 3, 2).unwrap()).mul(&p12);
        assert_eq!(r.embed_at_positions(&[2, 1], 3, 2).unwrap(), r21);
    }

    #[test]
    fn chain_inverse_round_trip() {
        let r = rmat();
        let fwd = r_chain(&r, 1, 2, 1, 3).unwrap();
        let bwd = r_chain(&r, 2, 1, -1, 3).unwrap();
        assert_eq!(fwd.mul(&bwd), QMatrix::identity(vec![2; 3]));
    }

    #[test]
    fn chain_shift_identities() {
        // (R_1 ... R_k) R_i = R_(i+1) (R_1 ... R_k) and
        // (R_k ... R_1) R_i = R_(i-1) (R_k ... R_1), consequences of the
        // Yang-Baxter equation, on four factors
        let r = rmat();
        let up = r_chain(&r, 1, 3, 1, 4).unwrap();
        for i in 1..=2usize {
            let ri = r.embed_at(i, 4, 2).unwrap();
            let ri1 = r.embed_at(i + 1, 4, 2).unwrap();
            assert_eq!(up.mul(&ri), ri1.mul(&up));
        }
        let down = r_chain(&r, 3, 1, 1, 4).unwrap();
        for i in 2..=3usize {
            let ri = r.embed_at(i, 4, 2).unwrap();
            let rim1 = r.embed_at(i - 1, 4, 2).unwrap();
            assert_eq!(down.mul(&ri), rim1.mul(&down));
        }
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank_exact(&QMatrix::zeros(vec![3], vec![3])), 0);
        assert_eq!(rank_exact(&QMatrix::identity(vec![2, 2])), 4);
        let m = QMatrix::from_str_rows(&[vec!["q", "q^2"], vec!["1", "q"]]);
        assert_eq!(rank_exact(&m), 1);
        let m2 = QMatrix::from_str_rows(&[vec!["q", "q^2"], vec!["1", "q + 1"]]);
        assert_eq!(rank_exact(&m2), 2);
    }

    #[test]
    fn rank_with_denominators() {
        let m = QMatrix::from_str_rows(&[vec!["1 / q + 1", "1"], vec!["1", "q + 1"]]);
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = QMatrix::identity(vec![2, 2]);
        let r = rmat();
        assert_eq!(
            solve_linear(&id, &r).unwrap(),
            r.clone().reshaped(vec![4], vec![4])
        );
        let zero = QMatrix::zeros(vec![4], vec![4]);
        assert_eq!(solve_linear(&zero, &r), None);
        // 0 x = 0 is consistent with canonical solution 0
        assert_eq!(solve_linear(&zero, &zero).unwrap(), zero);
    }

    #[test]
    fn solve_underdetermined_canonical() {
        // x + y = 1 with free y -> x = 1, y = 0
        let a = QMatrix::from_str_rows(&[vec!["1", "1"]]);
        let b = QMatrix::from_str_rows(&[vec!["1"]]);
        let x = solve_linear(&a, &b).unwrap();
        assert_eq!(x.at(0, 0), &lr("1"));
        assert_eq!(x.at(1, 0), &lr("0"));
    }

    #[test]
    fn inverse_round_trip() {
        let r = rmat();
        let inv = r.inverse().unwrap();
        assert_eq!(r.mul(&inv), QMatrix::identity(vec![2, 2]));
        assert_eq!(inv.mul(&r), QMatrix::identity(vec![2, 2]));
        assert!(QMatrix::zeros(vec![2], vec![2]).inverse().is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let m = QMatrix::from_str_rows(&[vec!["q", "q^2"], vec!["1", "q"]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        // q * (-q) + q^2 * 1 = 0
        let v = &ns[0];
        let check = &(&lr("q") * &v[0]) + &(&lr("q^2") * &v[1]);
        assert!(check.is_zero());
    }

    #[test]
    fn rank_specialization_agrees_on_full_rank() {
        use num_rational::BigRational;
        let two = BigRational::from(num_bigint::BigInt::from(2));
        let r = rmat();
        let sym = rank_exact(&r);
        let spec = rank_rational(&specialize_matrix(&r, &two).unwrap());
        assert!(sym >= spec);
        assert_eq!(sym, 4);
        assert_eq!(spec, 4);
    }

    #[test]
    fn json_round_trip() {
        let r = rmat();
        let j = r.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let j2: QMatrixJson = serde_json::from_str(&s).unwrap();
        assert_eq!(QMatrix::from_json(&j2).unwrap(), r);
    }
}
