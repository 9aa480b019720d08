//! Finite-dimensional representations of Z/p over F_p.
//!
//! An object is a unipotent operator `u` (the image of the generator) with
//! `(u − 1)^p = 0`. The Jordan block `J_m` has `u = 1 + N` with
//! `N e_k = e_{k+1}`, so `e_1` generates the block and `e_m` spans its socle.
//! Blocks of size `m < p` lift the simple objects L_m of Ver_p; blocks of
//! size p are projective and become zero after semisimplification.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{inconsistent, Error, Result};
use crate::fp::Prime;
use crate::matrix::{FpMatrix, IncrementalBasis};
use crate::sym_group::{all_perms, factorial, Perm};

#[derive(Clone, PartialEq, Eq)]
pub struct RepObject {
    u: FpMatrix,
}

impl fmt::Debug for RepObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepObject(dim {}, p {})", self.dim(), self.prime())
    }
}

impl RepObject {
    /// Wrap a generator matrix, checking `(u − 1)^p = 0`.
    pub fn new(u: FpMatrix) -> Result<RepObject> {
        if !u.is_square() {
            return Err(Error::ShapeMismatch("generator must be square".into()));
        }
        let p = u.prime();
        let n = u.sub(&FpMatrix::identity(p, u.rows()))?;
        if !n.pow(p.get()).is_zero() {
            return Err(Error::OutOfRange("(u - 1)^p is not zero".into()));
        }
        Ok(RepObject { u })
    }

    pub(crate) fn new_unchecked(u: FpMatrix) -> RepObject {
        RepObject { u }
    }

    pub fn zero(p: Prime) -> RepObject {
        RepObject::new_unchecked(FpMatrix::zeros(p, 0, 0))
    }

    pub fn unit(p: Prime) -> RepObject {
        jordan_object(p, 1).expect("1 <= p")
    }

    pub fn prime(&self) -> Prime {
        self.u.prime()
    }

    pub fn dim(&self) -> usize {
        self.u.rows()
    }

    pub fn generator(&self) -> &FpMatrix {
        &self.u
    }

    /// The nilpotent part `u − 1`.
    pub fn nilpotent(&self) -> FpMatrix {
        self.u.sub(&FpMatrix::identity(self.prime(), self.dim())).expect("square")
    }

    pub fn tensor(&self, o: &RepObject) -> RepObject {
        RepObject::new_unchecked(self.u.kron(&o.u))
    }

    pub fn direct_sum(&self, o: &RepObject) -> RepObject {
        RepObject::new_unchecked(self.u.direct_sum(&o.u))
    }

    /// The dual, with the inverse-transpose action.
    pub fn dual(&self) -> RepObject {
        let p = self.prime();
        let n = self.nilpotent();
        // u^{-1} = Σ_k (−N)^k, a finite sum since N^p = 0
        let mut inv = FpMatrix::identity(p, self.dim());
        let mut term = FpMatrix::identity(p, self.dim());
        let minus_n = n.neg();
        for _ in 1..p.usize() {
            term = term.mul(&minus_n).expect("square");
            inv = inv.add(&term).expect("square");
        }
        RepObject::new_unchecked(inv.transpose())
    }

    pub fn tensor_power(&self, n: usize) -> RepObject {
        let mut out = RepObject::unit(self.prime());
        for _ in 0..n {
            out = out.tensor(self);
        }
        out
    }

    pub fn jordan_type(&self) -> JordanType {
        jordan_type_of_nilpotent(&self.nilpotent())
    }

    /// Is `t` an intertwiner `self → dst`?
    pub fn intertwines(&self, dst: &RepObject, t: &FpMatrix) -> bool {
        t.shape() == (dst.dim(), self.dim())
            && t.mul(&self.u).ok() == dst.u.mul(t).ok()
    }
}

/// The Jordan block `J_m`, `1 ≤ m ≤ p`.
pub fn jordan_object(p: Prime, m: usize) -> Result<RepObject> {
    if m == 0 || m > p.usize() {
        return Err(Error::OutOfRange(format!("Jordan block size {m} outside 1..={p}")));
    }
    Ok(RepObject::new_unchecked(jordan_block_matrix(p, m)))
}

/// `1 + N` with `N e_k = e_{k+1}`.
pub fn jordan_block_matrix(p: Prime, m: usize) -> FpMatrix {
    let mut u = FpMatrix::identity(p, m);
    for k in 0..m.saturating_sub(1) {
        u.set(k + 1, k, 1);
    }
    u
}

/// The direct sum of the given Jordan blocks, in order.
pub fn jordan_sum(p: Prime, sizes: &[usize]) -> Result<RepObject> {
    let mut out = RepObject::zero(p);
    for &m in sizes {
        out = out.direct_sum(&jordan_object(p, m)?);
    }
    Ok(out)
}

/// Multiplicities of Jordan block sizes `1..=p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JordanType {
    counts: Vec<usize>,
}

impl JordanType {
    pub fn from_sizes(p: Prime, sizes: &[usize]) -> JordanType {
        let mut counts = vec![0; p.usize()];
        for &s in sizes {
            counts[s - 1] += 1;
        }
        JordanType { counts }
    }

    /// Number of blocks of size `m`.
    pub fn count(&self, m: usize) -> usize {
        self.counts.get(m - 1).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Block sizes in decreasing order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &c) in self.counts.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i + 1, c));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, c)| (i + 1) * c).sum()
    }
}

impl fmt::Debug for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let s: Vec<String> = self.sizes().iter().map(|s| s.to_string()).collect();
        write!(f, "{}}}", s.join(","))
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Jordan type from ranks of powers: #blocks of size ≥ k is `r_{k−1} − r_k`.
pub fn jordan_type_of_nilpotent(n: &FpMatrix) -> JordanType {
    let p = n.prime();
    let d = n.rows();
    let mut ranks = vec![d];
    let mut pw = FpMatrix::identity(p, d);
    for _ in 0..p.usize() {
        if ranks.last() == Some(&0) {
            ranks.push(0);
            continue;
        }
        pw = pw.mul(n).expect("square");
        ranks.push(pw.rank());
    }
    let mut counts = vec![0; p.usize()];
    for k in 1..=p.usize() {
        let at_least_k = ranks[k - 1] - ranks[k];
        let at_least_k1 = if k < p.usize() { ranks[k] - ranks[k + 1] } else { 0 };
        counts[k - 1] = at_least_k - at_least_k1;
    }
    JordanType { counts }
}

/// An intertwiner between two objects.
#[derive(Clone, Debug)]
pub struct RepMorphism {
    pub src: RepObject,
    pub dst: RepObject,
    pub t: FpMatrix,
}

impl RepMorphism {
    pub fn new(src: RepObject, dst: RepObject, t: FpMatrix) -> Result<RepMorphism> {
        if !src.intertwines(&dst, &t) {
            return Err(Error::ShapeMismatch("matrix is not an intertwiner".into()));
        }
        Ok(RepMorphism { src, dst, t })
    }

    pub fn identity(x: &RepObject) -> RepMorphism {
        RepMorphism {
            src: x.clone(),
            dst: x.clone(),
            t: FpMatrix::identity(x.prime(), x.dim()),
        }
    }

    pub fn compose(&self, first: &RepMorphism) -> Result<RepMorphism> {
        Ok(RepMorphism {
            src: first.src.clone(),
            dst: self.dst.clone(),
            t: self.t.mul(&first.t)?,
        })
    }

    pub fn tensor(&self, o: &RepMorphism) -> RepMorphism {
        RepMorphism {
            src: self.src.tensor(&o.src),
            dst: self.dst.tensor(&o.dst),
            t: self.t.kron(&o.t),
        }
    }
}

/// `ev: X* ⊗ X → 1`, `f ⊗ x ↦ f(x)`.
pub fn ev(x: &RepObject) -> RepMorphism {
    let d = x.dim();
    let mut t = FpMatrix::zeros(x.prime(), 1, d * d);
    for i in 0..d {
        t.set(0, i * d + i, 1);
    }
    RepMorphism {
        src: x.dual().tensor(x),
        dst: RepObject::unit(x.prime()),
        t,
    }
}

/// `coev: 1 → X ⊗ X*`, `1 ↦ Σ e_i ⊗ e^i`.
pub fn coev(x: &RepObject) -> RepMorphism {
    let d = x.dim();
    let mut t = FpMatrix::zeros(x.prime(), d * d, 1);
    for i in 0..d {
        t.set(i * d + i, 0, 1);
    }
    RepMorphism {
        src: RepObject::unit(x.prime()),
        dst: x.tensor(&x.dual()),
        t,
    }
}

/// A basis of the intertwiner space `Hom(X, Y)`.
pub fn hom_basis(x: &RepObject, y: &RepObject) -> Vec<FpMatrix> {
    let p = x.prime();
    let (dx, dy) = (x.dim(), y.dim());
    // row-major vec(T): vec(N_Y T) = (N_Y ⊗ I) vec T, vec(T N_X) = (I ⊗ N_X^T) vec T
    let a = y.nilpotent().kron(&FpMatrix::identity(p, dx));
    let b = FpMatrix::identity(p, dy).kron(&x.nilpotent().transpose());
    let k = a.sub(&b).expect("same shape").kernel_basis();
    (0..k.cols())
        .map(|j| {
            let c = k.col(j);
            FpMatrix::from_fn(p, dy, dx, |r, s| c[r * dx + s] as i64)
        })
        .collect()
}

/// A Jordan basis: columns of `t` form chains `g, Ng, …, N^{s−1}g`, one per
/// block, in the order listed by `blocks` (each entry is the block size).
#[derive(Clone, Debug)]
pub struct JordanBasis {
    pub t: FpMatrix,
    pub t_inv: FpMatrix,
    pub blocks: Vec<usize>,
}

impl JordanBasis {
    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    /// Starting column of each block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.blocks.len());
        let mut s = 0;
        for &b in &self.blocks {
            off.push(s);
            s += b;
        }
        off
    }

    pub fn jordan_type(&self, p: Prime) -> JordanType {
        JordanType::from_sizes(p, &self.blocks)
    }

    /// The standard basis of a direct sum of Jordan blocks.
    pub fn standard(p: Prime, sizes: &[usize]) -> JordanBasis {
        let d: usize = sizes.iter().sum();
        JordanBasis {
            t: FpMatrix::identity(p, d),
            t_inv: FpMatrix::identity(p, d),
            blocks: sizes.to_vec(),
        }
    }

    /// Checks `t_inv · N · t` is the block-diagonal Jordan form and `t_inv · t = 1`.
    pub fn verify(&self, x: &RepObject) -> bool {
        let p = x.prime();
        if self.t_inv.mul(&self.t).ok() != Some(FpMatrix::identity(p, self.dim())) {
            return false;
        }
        let j = self.t_inv.mul(&x.nilpotent()).unwrap().mul(&self.t).unwrap();
        let mut expect = FpMatrix::zeros(p, self.dim(), self.dim());
        for (off, &b) in self.offsets().iter().zip(&self.blocks) {
            for k in 0..b.saturating_sub(1) {
                expect.set(off + k + 1, off + k, 1);
            }
        }
        j == expect
    }
}

/// Jordan chains by the usual top-down basis extension.
pub fn jordan_basis(x: &RepObject) -> Result<JordanBasis> {
    let p = x.prime();
    let d = x.dim();
    if d == 0 {
        return Ok(JordanBasis::standard(p, &[]));
    }
    let n = x.nilpotent();
    // kernels of N^j, j = 0..=p
    let mut kernels = vec![FpMatrix::zeros(p, d, 0)];
    let mut pw = FpMatrix::identity(p, d);
    for _ in 0..p.usize() {
        pw = pw.mul(&n)?;
        kernels.push(pw.kernel_basis());
    }
    let mut gens: Vec<(usize, Vec<u32>)> = Vec::new();
    for s in (1..=p.usize()).rev() {
        let mut ib = IncrementalBasis::new(p, d);
        let below = &kernels[s - 1];
        for c in 0..below.cols() {
            ib.try_add(&below.col(c));
        }
        for (t, g) in &gens {
            let mut v = g.clone();
            for _ in 0..(t - s) {
                v = n.mul_vec(&v);
            }
            ib.try_add(&v);
        }
        let here = &kernels[s];
        for c in 0..here.cols() {
            let v = here.col(c);
            if ib.try_add(&v) {
                gens.push((s, v));
            }
        }
    }
    let mut cols = Vec::with_capacity(d);
    let mut blocks = Vec::with_capacity(gens.len());
    for (s, g) in gens {
        let mut v = g;
        for _ in 0..s {
            let next = n.mul_vec(&v);
            cols.push(v);
            v = next;
        }
        blocks.push(s);
    }
    if cols.len() != d {
        return Err(inconsistent(format!("Jordan chains span {} of {d} dimensions", cols.len())));
    }
    let t = FpMatrix::from_columns(p, d, &cols);
    let t_inv = t
        .inverse()
        .ok_or_else(|| inconsistent("Jordan chains are not independent"))?;
    Ok(JordanBasis { t, t_inv, blocks })
}

/// Jordan bases of `J_b ⊗ J_c`, memoized.
#[derive(Default)]
pub struct PairBases {
    cache: HashMap<(usize, usize), JordanBasis>,
}

impl PairBases {
    pub fn get(&mut self, p: Prime, b: usize, c: usize) -> Result<&JordanBasis> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.cache.entry((b, c)) {
            let x = jordan_object(p, b)?.tensor(&jordan_object(p, c)?);
            let jb = jordan_basis(&x)?;
            e.insert(jb);
        }
        Ok(&self.cache[&(b, c)])
    }
}

/// Jordan basis of `X ⊗ Y` assembled from Jordan bases of the factors.
///
/// In the basis `T_X ⊗ T_Y` the operator splits into the blocks `J_b ⊗ J_c`;
/// each is put in Jordan form by a small precomputed change of basis.
pub fn tensor_jordan_basis(
    p: Prime,
    jx: &JordanBasis,
    jy: &JordanBasis,
    pairs: &mut PairBases,
) -> Result<JordanBasis> {
    let (dx, dy) = (jx.dim(), jy.dim());
    let d = dx * dy;
    let mut t = FpMatrix::zeros(p, d, d);
    let mut t_inv = FpMatrix::zeros(p, d, d);
    let mut blocks = Vec::new();
    let (ox, oy) = (jx.offsets(), jy.offsets());
    let mut col = 0;
    for (i, &b) in jx.blocks.iter().enumerate() {
        let tx = jx.t.block(0, ox[i], dx, b);
        let tix = jx.t_inv.block(ox[i], 0, b, dx);
        for (j, &c) in jy.blocks.iter().enumerate() {
            let ty = jy.t.block(0, oy[j], dy, c);
            let tiy = jy.t_inv.block(oy[j], 0, c, dy);
            let s = pairs.get(p, b, c)?;
            let cols = tx.kron(&ty).mul(&s.t)?;
            let rows = s.t_inv.mul(&tix.kron(&tiy))?;
            t.set_block(0, col, &cols);
            t_inv.set_block(col, 0, &rows);
            blocks.extend_from_slice(&s.blocks);
            col += b * c;
        }
    }
    Ok(JordanBasis { t, t_inv, blocks })
}

/// Jordan basis of `V^{⊗n}` for V a direct sum of Jordan blocks in standard form.
pub fn tensor_power_jordan_basis(p: Prime, sizes: &[usize], n: usize) -> Result<JordanBasis> {
    let jv = JordanBasis::standard(p, sizes);
    let mut pairs = PairBases::default();
    let mut acc = JordanBasis::standard(p, &[1]);
    for _ in 0..n {
        acc = tensor_jordan_basis(p, &acc, &jv, &mut pairs)?;
    }
    Ok(acc)
}

/// A symmetric or exterior power together with its embedding in the tensor power.
#[derive(Clone, Debug)]
pub struct PowerObject {
    pub object: RepObject,
    /// `X^{⊗a} ← P`: the symmetrized (or antisymmetrized) basis tensors.
    pub inclusion: FpMatrix,
    /// `P ← X^{⊗a}` with `projection · inclusion = 1` and
    /// `inclusion · projection` the (anti)symmetrizing idempotent.
    pub projection: FpMatrix,
}

/// Multisets of size `a` from `0..d`, as sorted tuples in lexicographic order.
pub fn multisets(d: usize, a: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a);
    fn rec(d: usize, a: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == a {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(d, a, i, cur, out);
            cur.pop();
        }
    }
    rec(d, a, 0, &mut cur, &mut out);
    out
}

/// Strictly increasing `b`-tuples from `0..d`, lexicographic.
pub fn subsets(d: usize, b: usize) -> Vec<Vec<usize>> {
    multisets(d, b)
        .into_iter()
        .filter(|v| v.windows(2).all(|w| w[0] < w[1]))
        .collect()
}

fn multinomial(p: Prime, ms: &[usize]) -> u32 {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in ms {
        *counts.entry(i).or_insert(0) += 1;
    }
    let mut r = factorial(ms.len()) as u64;
    for c in counts.values() {
        r /= factorial(*c) as u64;
    }
    p.reduce(r as i64)
}

fn check_degree(a: usize, p: Prime, what: &str) -> Result<()> {
    if a >= p.usize() {
        return Err(Error::DegreeTooLarge(format!("{what} of degree {a} needs degree < p = {p}")));
    }
    Ok(())
}

/// `S^a X` in the basis of symmetrized tensors `ι(x^α) = Σ_{words of content α} e_w`.
///
/// The action is computed by polynomial substitution, then rescaled by the
/// multinomial coefficients relating monomials and symmetrized tensors.
pub fn sym_power_object(x: &RepObject, a: usize) -> Result<RepObject> {
    let p = x.prime();
    check_degree(a, p, "symmetric power")?;
    let d = x.dim();
    let basis = multisets(d, a);
    let index: HashMap<&Vec<usize>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let u = x.generator();
    let cols_u: Vec<Vec<u32>> = (0..d).map(|j| u.col(j)).collect();
    let mut out = FpMatrix::zeros(p, basis.len(), basis.len());
    for (j, alpha) in basis.iter().enumerate() {
        // Π_k u(e_{α_k}) as a polynomial
        let mut poly: HashMap<Vec<usize>, u32> = HashMap::from([(Vec::new(), 1)]);
        for &letter in alpha {
            let mut next: HashMap<Vec<usize>, u32> = HashMap::new();
            for (mono, c) in &poly {
                for (v, &coef) in cols_u[letter].iter().enumerate() {
                    if coef == 0 {
                        continue;
                    }
                    let mut m = mono.clone();
                    let pos = m.partition_point(|&z| z <= v);
                    m.insert(pos, v);
                    let e = next.entry(m).or_insert(0);
                    *e = p.add(*e, p.mul(*c, coef));
                }
            }
            poly = next;
        }
        let ma = multinomial(p, alpha);
        for (mono, c) in poly {
            if c == 0 {
                continue;
            }
            let i = index[&mono];
            let mb = multinomial(p, &mono);
            out.set(i, j, p.mul(p.mul(c, ma), p.inv(mb)));
        }
    }
    Ok(RepObject::new_unchecked(out))
}

/// `Λ^b X` in the basis of antisymmetrized tensors `Σ_σ sign(σ) e_{σ·I}`.
pub fn ext_power_object(x: &RepObject, b: usize) -> Result<RepObject> {
    let p = x.prime();
    check_degree(b, p, "exterior power")?;
    let d = x.dim();
    let basis = subsets(d, b);
    let index: HashMap<&Vec<usize>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let u = x.generator();
    let cols_u: Vec<Vec<u32>> = (0..d).map(|j| u.col(j)).collect();
    let mut out = FpMatrix::zeros(p, basis.len(), basis.len());
    for (j, cols) in basis.iter().enumerate() {
        // u(e_{c_1}) ∧ ⋯ ∧ u(e_{c_b}); its coefficients are the minors of u
        let mut wedge: HashMap<Vec<usize>, u32> = HashMap::from([(Vec::new(), 1)]);
        for &c in cols {
            let mut next: HashMap<Vec<usize>, u32> = HashMap::new();
            for (mono, coef) in &wedge {
                for (v, &uv) in cols_u[c].iter().enumerate() {
                    if uv == 0 || mono.binary_search(&v).is_ok() {
                        continue;
                    }
                    let pos = mono.partition_point(|&z| z < v);
                    let mut m = mono.clone();
                    m.insert(pos, v);
                    let t = p.mul(*coef, uv);
                    let e = next.entry(m).or_insert(0);
                    *e = if (mono.len() - pos) % 2 == 0 { p.add(*e, t) } else { p.sub(*e, t) };
                }
            }
            wedge = next;
        }
        for (mono, c) in wedge {
            if c != 0 {
                out.set(index[&mono], j, c);
            }
        }
    }
    Ok(RepObject::new_unchecked(out))
}

fn word_index(d: usize, w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &l| acc * d + l)
}

/// `S^a X` with its inclusion into and projection from `X^{⊗a}`.
pub fn sym_power(x: &RepObject, a: usize) -> Result<PowerObject> {
    let p = x.prime();
    let object = sym_power_object(x, a)?;
    let d = x.dim();
    let basis = multisets(d, a);
    let total = d.pow(a as u32);
    let mut inclusion = FpMatrix::zeros(p, total, basis.len());
    let mut projection = FpMatrix::zeros(p, basis.len(), total);
    let perms = all_perms(a);
    for (j, alpha) in basis.iter().enumerate() {
        let inv = p.inv(multinomial(p, alpha));
        for s in &perms {
            let w: Vec<usize> = (0..a).map(|k| alpha[s.apply(k)]).collect();
            let r = word_index(d, &w);
            inclusion.set(r, j, 1);
            projection.set(j, r, inv);
        }
    }
    Ok(PowerObject {
        object,
        inclusion,
        projection,
    })
}

/// `Λ^b X` with its inclusion into and projection from `X^{⊗b}`.
pub fn ext_power(x: &RepObject, b: usize) -> Result<PowerObject> {
    let p = x.prime();
    let object = ext_power_object(x, b)?;
    let d = x.dim();
    let basis = subsets(d, b);
    let total = d.pow(b as u32);
    let mut inclusion = FpMatrix::zeros(p, total, basis.len());
    let mut projection = FpMatrix::zeros(p, basis.len(), total);
    let inv = p.inv(p.reduce(factorial(b) as i64));
    for (j, set) in basis.iter().enumerate() {
        for s in all_perms(b) {
            let w: Vec<usize> = (0..b).map(|k| set[s.apply(k)]).collect();
            let r = word_index(d, &w);
            let sg = if s.sign() > 0 { 1 } else { p.neg(1) };
            inclusion.set(r, j, sg);
            projection.set(j, r, p.mul(sg, inv));
        }
    }
    Ok(PowerObject {
        object,
        inclusion,
        projection,
    })
}

/// The tensor-position permutation on `X^{⊗n}` as a morphism.
pub fn tensor_perm_on_power(x: &RepObject, n: usize, sigma: &Perm) -> Result<FpMatrix> {
    crate::matrix::tensor_perm(x.prime(), &vec![x.dim(); n], &sigma.images())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn j(m: usize) -> RepObject {
        jordan_object(p5(), m).unwrap()
    }

    #[test]
    fn jordan_types() {
        let x = j(3).direct_sum(&j(1));
        assert_eq!(x.jordan_type().sizes(), vec![3, 1]);
        assert_eq!(j(2).tensor(&j(2)).jordan_type().sizes(), vec![3, 1]);
        assert_eq!(j(2).tensor(&j(4)).jordan_type().sizes(), vec![5, 3]);
        assert!(jordan_object(p5(), 6).is_err());
    }

    #[test]
    fn duals_and_zigzag() {
        for m in 1..5 {
            assert_eq!(j(m).dual().jordan_type(), j(m).jordan_type());
        }
        for m in 1..=5 {
            let x = j(m);
            let d = x.dim();
            let p = p5();
            let c = coev(&x);
            let e = ev(&x);
            assert!(c.src.intertwines(&c.dst, &c.t));
            assert!(e.src.intertwines(&e.dst, &e.t));
            // (1_X ⊗ ev) ∘ (coev ⊗ 1_X) = 1_X
            let left = c.t.kron(&FpMatrix::identity(p, d));
            let right = FpMatrix::identity(p, d).kron(&e.t);
            assert_eq!(right.mul(&left).unwrap(), FpMatrix::identity(p, d));
        }
    }

    #[test]
    fn unit_is_neutral() {
        let x = j(3).direct_sum(&j(2));
        assert_eq!(RepObject::unit(p5()).tensor(&x), x);
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(hom_basis(&j(2), &j(3)).len(), 2);
        for m in 1..=5 {
            assert_eq!(hom_basis(&j(m), &j(m)).len(), m);
        }
        let x = j(2).tensor(&j(3));
        let hb = hom_basis(&x, &x);
        let span = FpMatrix::from_columns(
            p5(),
            x.dim() * x.dim(),
            &hb.iter().map(|h| h.data().to_vec()).collect::<Vec<_>>(),
        );
        let id = FpMatrix::identity(p5(), x.dim());
        assert!(span.solve(&FpMatrix::column(p5(), id.data())).is_ok());
    }

    #[test]
    fn jordan_basis_generic_and_tensor() {
        let x = j(2).tensor(&j(3)).tensor(&j(4));
        let jb = jordan_basis(&x).unwrap();
        assert!(jb.verify(&x));
        assert_eq!(jb.jordan_type(p5()), x.jordan_type());
        let tp = tensor_power_jordan_basis(p5(), &[2, 3], 3).unwrap();
        let v = jordan_sum(p5(), &[2, 3]).unwrap();
        let v3 = v.tensor_power(3);
        assert!(tp.verify(&v3));
        assert_eq!(tp.jordan_type(p5()), v3.jordan_type());
    }

    #[test]
    fn powers() {
        let s3 = sym_power(&j(2), 3).unwrap();
        assert_eq!(s3.object.dim(), 4);
        assert_eq!(s3.object.jordan_type().sizes(), vec![4]);
        let x = j(3);
        for a in 1..4 {
            for pw in [sym_power(&x, a).unwrap(), ext_power(&x, a).unwrap()] {
                let xa = x.tensor_power(a);
                // inclusion is an intertwiner and split by the projection
                assert!(pw.object.intertwines(&xa, &pw.inclusion));
                assert!(xa.intertwines(&pw.object, &pw.projection));
                let k = pw.object.dim();
                assert_eq!(pw.projection.mul(&pw.inclusion).unwrap(), FpMatrix::identity(p5(), k));
            }
        }
        assert_eq!(sym_power(&x, 1).unwrap().object, x);
        assert_eq!(ext_power(&j(3), 3).unwrap().object.jordan_type().sizes(), vec![1]);
        assert!(sym_power(&x, 5).is_err());
    }
}
