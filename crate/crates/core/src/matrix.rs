//! Dense matrices over F_p and the elimination kernels everything else
//! is built on.
//!
//! Storage is row-major with entries in `0..p`. Tensor products follow the
//! usual Kronecker convention: the first factor is the most significant
//! digit of a basis index, so `kron(A, B)[(i, k), (j, l)] = A[i, j] B[k, l]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::fp::Prime;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows.min(24) {
            let row: Vec<String> = self.row(r).iter().take(24).map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> FpMatrix {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(p: Prime, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> FpMatrix {
        let mut m = FpMatrix::zeros(p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = p.reduce(f(r, c));
            }
        }
        m
    }

    /// Build from integer rows; all rows must have equal length.
    pub fn from_rows(p: Prime, rows: &[Vec<i64>]) -> FpMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        FpMatrix::from_fn(p, rows.len(), cols, |r, c| rows[r][c])
    }

    /// A single column vector.
    pub fn column(p: Prime, v: &[u32]) -> FpMatrix {
        FpMatrix {
            p,
            rows: v.len(),
            cols: 1,
            data: v.iter().map(|&x| x % p.get()).collect(),
        }
    }

    pub fn from_columns(p: Prime, rows: usize, cols: &[Vec<u32>]) -> FpMatrix {
        let mut m = FpMatrix::zeros(p, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.data[i * m.cols + j] = c[i];
            }
        }
        m
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p.get();
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_same(&self, o: &FpMatrix, what: &str) -> Result<()> {
        if self.p != o.p || self.rows != o.rows || self.cols != o.cols {
            return Err(Error::ShapeMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &FpMatrix) -> Result<FpMatrix> {
        self.check_same(o, "add")?;
        let p = self.p;
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| p.add(a, b)).collect();
        Ok(self.with_data(data))
    }

    pub fn sub(&self, o: &FpMatrix) -> Result<FpMatrix> {
        self.check_same(o, "sub")?;
        let p = self.p;
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| p.sub(a, b)).collect();
        Ok(self.with_data(data))
    }

    /// In-place `self += c * o`.
    pub fn add_scaled(&mut self, c: u32, o: &FpMatrix) -> Result<()> {
        self.check_same(o, "add_scaled")?;
        let p = self.p.get();
        let c = c % p;
        if c == 0 {
            return Ok(());
        }
        for (a, &b) in self.data.iter_mut().zip(&o.data) {
            *a = (*a + c * b) % p;
        }
        Ok(())
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let p = self.p;
        let c = c % p.get();
        self.with_data(self.data.iter().map(|&a| p.mul(a, c)).collect())
    }

    pub fn neg(&self) -> FpMatrix {
        let p = self.p;
        self.with_data(self.data.iter().map(|&a| p.neg(a)).collect())
    }

    fn with_data(&self, data: Vec<u32>) -> FpMatrix {
        FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, o: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != o.rows || self.p != o.p {
            return Err(Error::ShapeMismatch(format!(
                "mul: {}x{} * {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(self.mul_unchecked(o))
    }

    fn mul_unchecked(&self, o: &FpMatrix) -> FpMatrix {
        let p = self.p.get();
        let n = o.cols;
        let mut out = FpMatrix::zeros(self.p, self.rows, n);
        // Accumulate without reduction: (p-1)^2 * k stays far below 2^32
        // for every size used here; reduce periodically to be safe.
        let flush = (u32::MAX / ((p - 1) * (p - 1) + 1)) as usize;
        let mut acc = vec![0u32; n];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let arow = self.row(r);
            let mut since = 0usize;
            for (k, &a) in arow.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let brow = o.row(k);
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b;
                }
                since += 1;
                if since + 1 >= flush {
                    acc.iter_mut().for_each(|x| *x %= p);
                    since = 0;
                }
            }
            for (d, x) in out.row_mut(r).iter_mut().zip(&acc) {
                *d = x % p;
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p.get();
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| (a * b) as u64).sum();
                (s % p as u64) as u32
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> FpMatrix {
        assert!(self.is_square());
        let mut r = FpMatrix::identity(self.p, self.rows);
        for _ in 0..e {
            r = r.mul_unchecked(self);
        }
        r
    }

    /// Kronecker product.
    pub fn kron(&self, o: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, o.p);
        let p = self.p;
        let rows = self.rows * o.rows;
        let cols = self.cols * o.cols;
        let mut m = FpMatrix::zeros(p, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..o.rows {
                    let base = (i * o.rows + k) * cols + j * o.cols;
                    for l in 0..o.cols {
                        m.data[base + l] = p.mul(a, o.get(k, l));
                    }
                }
            }
        }
        m
    }

    pub fn hstack(parts: &[&FpMatrix]) -> Result<FpMatrix> {
        let first = parts.first().ok_or_else(|| Error::ShapeMismatch("empty hstack".into()))?;
        let rows = first.rows;
        if parts.iter().any(|m| m.rows != rows || m.p != first.p) {
            return Err(Error::ShapeMismatch("hstack row counts differ".into()));
        }
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = FpMatrix::zeros(first.p, rows, cols);
        for r in 0..rows {
            let mut off = 0;
            for m in parts {
                out.data[r * cols + off..r * cols + off + m.cols].copy_from_slice(m.row(r));
                off += m.cols;
            }
        }
        Ok(out)
    }

    pub fn vstack(parts: &[&FpMatrix]) -> Result<FpMatrix> {
        let first = parts.first().ok_or_else(|| Error::ShapeMismatch("empty vstack".into()))?;
        let cols = first.cols;
        if parts.iter().any(|m| m.cols != cols || m.p != first.p) {
            return Err(Error::ShapeMismatch("vstack column counts differ".into()));
        }
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend_from_slice(&m.data);
        }
        Ok(FpMatrix {
            p: first.p,
            rows,
            cols,
            data,
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> FpMatrix {
        FpMatrix::from_fn(self.p, self.rows, idx.len(), |r, c| self.get(r, idx[c]) as i64)
    }

    pub fn select_rows(&self, idx: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        FpMatrix {
            p: self.p,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FpMatrix {
        FpMatrix::from_fn(self.p, rows, cols, |r, c| self.get(r0 + r, c0 + c) as i64)
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &FpMatrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = b.get(r, c);
            }
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &FpMatrix) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, self.rows + o.rows, self.cols + o.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, o);
        m
    }

    pub fn trace(&self) -> u32 {
        let p = self.p;
        (0..self.rows.min(self.cols)).fold(0, |acc, i| p.add(acc, self.get(i, i)))
    }

    /// Reduced row-echelon form and the ascending list of pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Rank by forward elimination only.
    fn echelon_rank(mut self) -> usize {
        let pv = self.p.get();
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = self.p.inv(self.data[r * cols + c]);
            let (head, rest) = self.data.split_at_mut((r + 1) * cols);
            let prow = &head[r * cols + c..];
            for row in rest.chunks_exact_mut(cols) {
                let f = row[c];
                if f != 0 {
                    let nf = pv - (f * inv) % pv;
                    for (x, &y) in row[c..].iter_mut().zip(prow) {
                        *x = (*x + nf * y) % pv;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let pv = p.get();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = p.inv(self.data[r * cols + c]);
            if inv != 1 {
                for j in c..cols {
                    let x = &mut self.data[r * cols + j];
                    *x = (*x * inv) % pv;
                }
            }
            let (head, tail) = self.data.split_at_mut(r * cols);
            let (prow, rest) = tail.split_at_mut(cols);
            let prow = &prow[c..];
            let eliminate = |row: &mut [u32]| {
                let f = row[c];
                if f != 0 {
                    let nf = pv - f;
                    for (x, &y) in row[c..].iter_mut().zip(prow) {
                        *x = (*x + nf * y) % pv;
                    }
                }
            };
            for row in head.chunks_exact_mut(cols) {
                eliminate(row);
            }
            for row in rest.chunks_exact_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.clone().echelon_rank()
        } else {
            self.transpose().echelon_rank()
        }
    }

    /// Columns form a basis of `{x : M x = 0}`.
    pub fn kernel_basis(&self) -> FpMatrix {
        let (r, pivots) = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = FpMatrix::zeros(p, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.data[f * free.len() + j] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                k.data[pc * free.len() + j] = p.neg(r.get(i, f));
            }
        }
        k
    }

    /// Columns form a basis of the column space (the pivot columns of `M`).
    pub fn image_basis(&self) -> FpMatrix {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    /// Basis of the row space, as the nonzero rows of the rref.
    pub fn row_space(&self) -> FpMatrix {
        let (r, pivots) = self.rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// One solution `X` of `M X = B`, or [`Error::InconsistentSystem`].
    pub fn solve(&self, b: &FpMatrix) -> Result<FpMatrix> {
        if b.rows != self.rows || b.p != self.p {
            return Err(Error::ShapeMismatch(format!(
                "solve: {}x{} with rhs {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let aug = FpMatrix::hstack(&[self, b])?;
        let (r, pivots) = aug.rref();
        let mut x = FpMatrix::zeros(self.p, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            if pc >= self.cols {
                return Err(Error::InconsistentSystem);
            }
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = r.get(i, self.cols + j);
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = FpMatrix::hstack(&[self, &FpMatrix::identity(self.p, n)]).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }
}

/// The permutation matrix of the tensor-factor permutation `sigma` acting on
/// a tensor product with factor dimensions `dims`.
///
/// `sigma` is given by its 0-based images and moves the factor in position
/// `k` to position `sigma[k]`; equivalently it sends
/// `e_{i_1} ⊗ … ⊗ e_{i_n}` to `e_{i_{σ⁻¹(1)}} ⊗ … ⊗ e_{i_{σ⁻¹(n)}}`.
/// With composition `(στ)(k) = σ(τ(k))` this is a homomorphism:
/// `tensor_perm(σ) · tensor_perm(τ) = tensor_perm(στ)` (on equal factors).
pub fn tensor_perm(p: Prime, dims: &[usize], sigma: &[usize]) -> Result<FpMatrix> {
    let map = tensor_perm_map(dims, sigma)?;
    let n = map.len();
    let mut m = FpMatrix::zeros(p, n, n);
    for (src, &dst) in map.iter().enumerate() {
        m.data[dst * n + src] = 1;
    }
    Ok(m)
}

/// The index map underlying [`tensor_perm`]: `map[src] = dst`.
pub fn tensor_perm_map(dims: &[usize], sigma: &[usize]) -> Result<Vec<usize>> {
    let n = dims.len();
    if sigma.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "permutation of {} positions applied to {} factors",
            sigma.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || seen[s] {
            return Err(Error::ShapeMismatch("not a permutation".into()));
        }
        seen[s] = true;
    }
    let mut out_dims = vec![0; n];
    for k in 0..n {
        out_dims[sigma[k]] = dims[k];
    }
    let total: usize = dims.iter().product();
    let mut map = vec![0; total];
    let mut digits = vec![0usize; n];
    let mut out_digits = vec![0usize; n];
    for (src, slot) in map.iter_mut().enumerate() {
        let mut rem = src;
        for k in (0..n).rev() {
            digits[k] = rem % dims[k];
            rem /= dims[k];
        }
        for k in 0..n {
            out_digits[sigma[k]] = digits[k];
        }
        let mut dst = 0;
        for k in 0..n {
            dst = dst * out_dims[k] + out_digits[k];
        }
        *slot = dst;
    }
    Ok(map)
}

/// An echelon basis that can be grown one vector at a time.
///
/// Used for basis extension ("pick vectors independent modulo a subspace")
/// and membership tests.
#[derive(Clone, Debug)]
pub struct IncrementalBasis {
    p: Prime,
    dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl IncrementalBasis {
    pub fn new(p: Prime, dim: usize) -> IncrementalBasis {
        IncrementalBasis {
            p,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, v: &mut [u32]) {
        let p = self.p.get();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f != 0 {
                let nf = p - f;
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = (*x + nf * y) % p;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Add `v` if it is independent of the current span; returns whether it was added.
    pub fn try_add(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let p = self.p;
        let inv = p.inv(w[pc]);
        for x in w.iter_mut() {
            *x = p.mul(*x, inv);
        }
        // keep earlier rows reduced at the new pivot
        let pv = p.get();
        for row in self.rows.iter_mut() {
            let f = row[pc];
            if f != 0 {
                let nf = pv - f;
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = (*x + nf * y) % pv;
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn random(p: Prime, r: usize, c: usize, rng: &mut ChaCha8Rng) -> FpMatrix {
        FpMatrix::from_fn(p, r, c, |_, _| rng.gen_range(0..p.get()) as i64)
    }

    #[test]
    fn rref_identity_and_zero() {
        let (r, piv) = FpMatrix::identity(p5(), 3).rref();
        assert_eq!(r, FpMatrix::identity(p5(), 3));
        assert_eq!(piv, vec![0, 1, 2]);
        let (r, piv) = FpMatrix::zeros(p5(), 2, 2).rref();
        assert!(r.is_zero());
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        let m = FpMatrix::from_rows(p5(), &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_zero() {
        for d in 0..5 {
            assert_eq!(FpMatrix::zeros(p5(), d, d).kernel_basis().cols(), d);
        }
    }

    #[test]
    fn rank_nullity_and_kernel_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (r, c) = (rng.gen_range(1..8), rng.gen_range(1..8));
            let mut m = random(p5(), r, c, &mut rng);
            if rng.gen_bool(0.3) {
                // force a dependency
                let row0 = m.row(0).to_vec();
                if r > 1 {
                    m.row_mut(r - 1).copy_from_slice(&row0);
                }
            }
            let k = m.kernel_basis();
            assert_eq!(m.rank() + k.cols(), c);
            assert!(m.mul(&k).unwrap().is_zero());
            assert_eq!(k.rank(), k.cols());
            assert_eq!(m.image_basis().cols(), m.rank());
        }
    }

    #[test]
    fn rref_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let m = random(p5(), 4, 6, &mut rng);
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            assert_eq!(r1, r2);
            assert_eq!(p1, p2);
        }
    }

    #[test]
    fn kron_rank_multiplies() {
        // brute force: rank of A⊗B against rank(A)·rank(B) on random 3x3 inputs
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let mut a = random(p5(), 3, 3, &mut rng);
            let mut b = random(p5(), 3, 3, &mut rng);
            if rng.gen_bool(0.5) {
                let r = a.row(0).to_vec();
                a.row_mut(1).copy_from_slice(&r);
            }
            if rng.gen_bool(0.5) {
                b.row_mut(2).iter_mut().for_each(|x| *x = 0);
            }
            assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
        }
    }

    #[test]
    fn solve_and_inconsistency() {
        let m = FpMatrix::from_rows(p5(), &[vec![1, 2], vec![2, 4]]);
        let b = FpMatrix::column(p5(), &[3, 1]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul(&x).unwrap(), b);
        let bad = FpMatrix::column(p5(), &[1, 0]);
        assert!(matches!(m.solve(&bad), Err(Error::InconsistentSystem)));
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut found = 0;
        while found < 10 {
            let m = random(p5(), 4, 4, &mut rng);
            if let Some(inv) = m.inverse() {
                assert_eq!(m.mul(&inv).unwrap(), FpMatrix::identity(p5(), 4));
                found += 1;
            } else {
                assert!(m.rank() < 4);
            }
        }
    }

    fn compose(s: &[usize], t: &[usize]) -> Vec<usize> {
        t.iter().map(|&x| s[x]).collect()
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for q in all_perms(n - 1) {
            for pos in 0..n {
                let mut v: Vec<usize> = q.clone();
                v.insert(pos, n - 1);
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn tensor_perm_identity_and_involution() {
        let id = tensor_perm(p5(), &[2, 2], &[0, 1]).unwrap();
        assert_eq!(id, FpMatrix::identity(p5(), 4));
        let sw = tensor_perm(p5(), &[2, 2], &[1, 0]).unwrap();
        assert_eq!(sw.mul(&sw).unwrap(), FpMatrix::identity(p5(), 4));
        // unequal factors: swap maps 2⊗3 to 3⊗2, and back
        let a = tensor_perm(p5(), &[2, 3], &[1, 0]).unwrap();
        let b = tensor_perm(p5(), &[3, 2], &[1, 0]).unwrap();
        assert_eq!(b.mul(&a).unwrap(), FpMatrix::identity(p5(), 6));
    }

    #[test]
    fn tensor_perm_is_homomorphism() {
        for n in 2..=4 {
            let dims = vec![2; n];
            for s in all_perms(n) {
                for t in all_perms(n) {
                    let lhs = tensor_perm(p5(), &dims, &s).unwrap().mul(&tensor_perm(p5(), &dims, &t).unwrap()).unwrap();
                    let rhs = tensor_perm(p5(), &dims, &compose(&s, &t)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn tensor_perm_moves_factors() {
        // σ sends position 0 to 1: e_a ⊗ e_b ↦ e_b ⊗ e_a
        let p = p5();
        let a = FpMatrix::column(p, &[1, 2]);
        let b = FpMatrix::column(p, &[3, 0, 1]);
        let sw = tensor_perm(p, &[2, 3], &[1, 0]).unwrap();
        assert_eq!(sw.mul(&a.kron(&b)).unwrap(), b.kron(&a));
    }

    #[test]
    fn incremental_basis() {
        let p = p5();
        let mut ib = IncrementalBasis::new(p, 3);
        assert!(ib.try_add(&[1, 2, 0]));
        assert!(!ib.try_add(&[2, 4, 0]));
        assert!(ib.try_add(&[0, 1, 1]));
        assert!(ib.contains(&[1, 3, 1]));
        assert!(!ib.contains(&[0, 0, 1]));
        assert_eq!(ib.len(), 2);
    }
}
