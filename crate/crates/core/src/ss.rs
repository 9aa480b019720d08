//! The semisimplification functor Rep(Z/p) → Ver_p, made computational.
//!
//! For each simple L_m (m < p) an object X gets injections `g_i: J_m → X`
//! and projections `h_i: X → J_m` with `λ(h_i ∘ g_j) = δ_ij`, where
//! `λ(φ) = trace(φ)/m` on End(J_m). A morphism then becomes one matrix per
//! simple, `λ(h^Y_i ∘ f ∘ g^X_j)`, and negligible morphisms become zero.
//!
//! Concretely `λ(h ∘ f ∘ g)` is the socle coordinate of `h(f(g(e_m)))`, so
//! each injection is stored through its socle vector `g(e_m)` and each
//! projection through the functional `x ↦ e_m`-coordinate of `h(x)`.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{inconsistent, Error, Result};
use crate::fp::Prime;
use crate::matrix::FpMatrix;
use crate::rep::{JordanBasis, RepObject};

/// An element of the Grothendieck ring of Ver_p: multiplicities of L_1..L_{p−1}.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VerClass {
    p: Prime,
    mult: Vec<i64>,
}

impl VerClass {
    pub fn zero(p: Prime) -> VerClass {
        VerClass {
            p,
            mult: vec![0; p.usize() - 1],
        }
    }

    /// The class of L_m, `1 ≤ m ≤ p − 1`.
    pub fn simple(p: Prime, m: usize) -> Result<VerClass> {
        if m == 0 || m >= p.usize() {
            return Err(Error::OutOfRange(format!("L_{m} is not a simple of Ver_{p}")));
        }
        let mut c = VerClass::zero(p);
        c.mult[m - 1] = 1;
        Ok(c)
    }

    pub fn unit(p: Prime) -> VerClass {
        VerClass::simple(p, 1).expect("p >= 3")
    }

    /// The odd line `1_- = L_{p−1}`.
    pub fn odd_line(p: Prime) -> VerClass {
        VerClass::simple(p, p.usize() - 1).expect("p >= 3")
    }

    pub fn from_mults(p: Prime, mult: Vec<i64>) -> Result<VerClass> {
        if mult.len() != p.usize() - 1 {
            return Err(Error::ShapeMismatch(format!(
                "class at p = {p} needs {} multiplicities, got {}",
                p.usize() - 1,
                mult.len()
            )));
        }
        Ok(VerClass { p, mult })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Multiplicity of L_m.
    pub fn get(&self, m: usize) -> i64 {
        self.mult[m - 1]
    }

    pub fn set(&mut self, m: usize, v: i64) {
        self.mult[m - 1] = v;
    }

    pub fn mults(&self) -> &[i64] {
        &self.mult
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mult.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i64) -> VerClass {
        VerClass {
            p: self.p,
            mult: self.mult.iter().map(|c| c * k).collect(),
        }
    }

    /// Dimension of the minimal lift `⊕ c_m J_m`.
    pub fn lift_dim(&self) -> i64 {
        self.mult.iter().enumerate().map(|(i, c)| (i as i64 + 1) * c).sum()
    }

    /// Block sizes of the minimal lift, one entry per copy.
    pub fn lift_sizes(&self) -> Result<Vec<usize>> {
        if !self.is_nonnegative() {
            return Err(Error::OutOfRange(format!("virtual class {self} has no lift")));
        }
        let mut out = Vec::new();
        for (i, &c) in self.mult.iter().enumerate() {
            out.extend(std::iter::repeat_n(i + 1, c as usize));
        }
        Ok(out)
    }

    /// The minimal lift `⊕ c_m J_m` as a representation.
    pub fn lift(&self) -> Result<RepObject> {
        crate::rep::jordan_sum(self.p, &self.lift_sizes()?)
    }

    /// Product in the fusion ring.
    pub fn fuse(&self, o: &VerClass) -> VerClass {
        crate::ring::fuse_classes(self, o)
    }

    /// `L_m ↦ L_{p−m}`, i.e. tensoring with the odd line.
    pub fn twist_odd(&self) -> VerClass {
        let n = self.mult.len();
        VerClass {
            p: self.p,
            mult: (0..n).map(|i| self.mult[n - 1 - i]).collect(),
        }
    }
}

impl Add for &VerClass {
    type Output = VerClass;
    fn add(self, o: &VerClass) -> VerClass {
        assert_eq!(self.p, o.p);
        VerClass {
            p: self.p,
            mult: self.mult.iter().zip(&o.mult).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &VerClass {
    type Output = VerClass;
    fn sub(self, o: &VerClass) -> VerClass {
        assert_eq!(self.p, o.p);
        VerClass {
            p: self.p,
            mult: self.mult.iter().zip(&o.mult).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for VerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.mult.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("L{}", i + 1)),
                _ => parts.push(format!("{c}*L{}", i + 1)),
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for VerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Splitting data for one simple L_m inside an object.
#[derive(Clone, Debug)]
pub struct SimpleSplit {
    /// `g_i(e_1)` as columns.
    pub gens: FpMatrix,
    /// `g_i(e_m) = N^{m−1} g_i(e_1)` as columns.
    pub socles: FpMatrix,
    /// Socle-coordinate functionals of the `h_i`, as rows.
    pub funcs: FpMatrix,
}

impl SimpleSplit {
    pub fn multiplicity(&self) -> usize {
        self.gens.cols()
    }
}

/// Per-simple dual bases splitting off the negligible part of an object.
#[derive(Clone, Debug)]
pub struct SSData {
    p: Prime,
    dim: usize,
    per: Vec<SimpleSplit>,
}

impl SSData {
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn split(&self, m: usize) -> &SimpleSplit {
        &self.per[m - 1]
    }

    pub fn class(&self) -> VerClass {
        VerClass {
            p: self.p,
            mult: self.per.iter().map(|s| s.multiplicity() as i64).collect(),
        }
    }

    /// Splitting read off a Jordan basis: each block of size m < p contributes
    /// its first and last chain vectors and the last dual row.
    pub fn from_jordan_basis(p: Prime, jb: &JordanBasis) -> SSData {
        let dim = jb.dim();
        let offs = jb.offsets();
        let mut per = Vec::with_capacity(p.usize() - 1);
        for m in 1..p.usize() {
            let idx: Vec<usize> = (0..jb.blocks.len()).filter(|&i| jb.blocks[i] == m).collect();
            let gens = jb.t.select_cols(&idx.iter().map(|&i| offs[i]).collect::<Vec<_>>());
            let socle_idx: Vec<usize> = idx.iter().map(|&i| offs[i] + m - 1).collect();
            let socles = jb.t.select_cols(&socle_idx);
            let funcs = jb.t_inv.select_rows(&socle_idx);
            per.push(SimpleSplit { gens, socles, funcs });
        }
        SSData { p, dim, per }
    }

    /// The trivial splitting of a direct sum of Jordan blocks in standard form.
    pub fn standard(p: Prime, sizes: &[usize]) -> SSData {
        SSData::from_jordan_basis(p, &JordanBasis::standard(p, sizes))
    }

    /// Checks `funcs · socles = 1` per simple and that each func/gen pair
    /// defines intertwiners (`λ N^m = 0`, `N^m g = 0`).
    pub fn verify(&self, x: &RepObject) -> bool {
        let n = x.nilpotent();
        for (i, s) in self.per.iter().enumerate() {
            let m = i + 1;
            let k = s.multiplicity();
            if s.funcs.mul(&s.socles).ok() != Some(FpMatrix::identity(self.p, k)) {
                return false;
            }
            let nm = n.pow(m as u32);
            if !nm.mul(&s.gens).unwrap().is_zero() || !s.funcs.mul(&nm).unwrap().is_zero() {
                return false;
            }
            if n.pow(m as u32 - 1).mul(&s.gens).unwrap() != s.socles {
                return false;
            }
        }
        true
    }
}

/// Splitting via Hom spaces and a rank factorization of the trace pairing.
///
/// `Hom(J_m, X) ≅ ker N^m` through `T ↦ T(e_1)`, and `Hom(X, J_m)` is
/// identified with functionals `λ` satisfying `λ N^m = 0`. The pairing is
/// `B(i, j) = λ_i(N^{m−1} v_j)`.
pub fn decompose(x: &RepObject) -> Result<SSData> {
    let p = x.prime();
    let d = x.dim();
    let n = x.nilpotent();
    let jt = x.jordan_type();
    let mut per = Vec::with_capacity(p.usize() - 1);
    let mut pw_prev = FpMatrix::identity(p, d); // N^{m-1}
    for m in 1..p.usize() {
        let pw = pw_prev.mul(&n)?; // N^m
        let v = pw.kernel_basis();
        let lam = pw.transpose().kernel_basis().transpose();
        let b = lam.mul(&pw_prev)?.mul(&v)?;
        let (_, cols) = b.rref();
        let (_, rows) = b.transpose().rref();
        if cols.len() != jt.count(m) {
            return Err(inconsistent(format!(
                "pairing rank {} differs from Jordan multiplicity {} at m = {m}",
                cols.len(),
                jt.count(m)
            )));
        }
        let minor = b.select_rows(&rows).select_cols(&cols);
        let minv = minor
            .inverse()
            .ok_or_else(|| inconsistent("pairing minor is singular"))?;
        let gens = v.select_cols(&cols);
        let socles = pw_prev.mul(&gens)?;
        let funcs = minv.mul(&lam.select_rows(&rows))?;
        per.push(SimpleSplit { gens, socles, funcs });
        pw_prev = pw;
    }
    Ok(SSData { p, dim: d, per })
}

/// Splitting through an explicit Jordan basis.
pub fn decompose_via_jordan(x: &RepObject) -> Result<SSData> {
    let jb = crate::rep::jordan_basis(x)?;
    Ok(SSData::from_jordan_basis(x.prime(), &jb))
}

/// A morphism of Ver_p: one matrix per simple, shaped (dst mult) × (src mult).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerMorphism {
    p: Prime,
    blocks: Vec<FpMatrix>,
}

impl VerMorphism {
    pub fn new(p: Prime, blocks: Vec<FpMatrix>) -> Result<VerMorphism> {
        if blocks.len() != p.usize() - 1 {
            return Err(Error::ShapeMismatch("one block per simple expected".into()));
        }
        Ok(VerMorphism { p, blocks })
    }

    pub fn zero(src: &VerClass, dst: &VerClass) -> VerMorphism {
        let p = src.prime();
        VerMorphism {
            p,
            blocks: (1..p.usize())
                .map(|m| FpMatrix::zeros(p, dst.get(m).max(0) as usize, src.get(m).max(0) as usize))
                .collect(),
        }
    }

    pub fn identity(c: &VerClass) -> VerMorphism {
        let p = c.prime();
        VerMorphism {
            p,
            blocks: (1..p.usize())
                .map(|m| FpMatrix::identity(p, c.get(m).max(0) as usize))
                .collect(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn block(&self, m: usize) -> &FpMatrix {
        &self.blocks[m - 1]
    }

    pub fn blocks(&self) -> &[FpMatrix] {
        &self.blocks
    }

    pub fn src_class(&self) -> VerClass {
        VerClass {
            p: self.p,
            mult: self.blocks.iter().map(|b| b.cols() as i64).collect(),
        }
    }

    pub fn dst_class(&self) -> VerClass {
        VerClass {
            p: self.p,
            mult: self.blocks.iter().map(|b| b.rows() as i64).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &VerMorphism) -> Result<VerMorphism> {
        let blocks = self
            .blocks
            .iter()
            .zip(&first.blocks)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<_>>()?;
        Ok(VerMorphism { p: self.p, blocks })
    }

    pub fn add(&self, o: &VerMorphism) -> Result<VerMorphism> {
        let blocks = self
            .blocks
            .iter()
            .zip(&o.blocks)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(VerMorphism { p: self.p, blocks })
    }

    pub fn scale(&self, c: u32) -> VerMorphism {
        VerMorphism {
            p: self.p,
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    /// Side-by-side: a morphism from the direct sum of the sources.
    pub fn hstack(parts: &[&VerMorphism]) -> Result<VerMorphism> {
        let p = parts.first().ok_or_else(|| Error::ShapeMismatch("empty stack".into()))?.p;
        let blocks = (0..p.usize() - 1)
            .map(|i| {
                let bs: Vec<&FpMatrix> = parts.iter().map(|v| &v.blocks[i]).collect();
                FpMatrix::hstack(&bs)
            })
            .collect::<Result<_>>()?;
        Ok(VerMorphism { p, blocks })
    }

    /// Stacked: a morphism into the direct sum of the targets.
    pub fn vstack(parts: &[&VerMorphism]) -> Result<VerMorphism> {
        let p = parts.first().ok_or_else(|| Error::ShapeMismatch("empty stack".into()))?.p;
        let blocks = (0..p.usize() - 1)
            .map(|i| {
                let bs: Vec<&FpMatrix> = parts.iter().map(|v| &v.blocks[i]).collect();
                FpMatrix::vstack(&bs)
            })
            .collect::<Result<_>>()?;
        Ok(VerMorphism { p, blocks })
    }

    /// `f ⊗ id_{1_-}`: the block for L_m moves to L_{p−m}.
    pub fn twist_odd(&self) -> VerMorphism {
        let mut blocks = self.blocks.clone();
        blocks.reverse();
        VerMorphism { p: self.p, blocks }
    }

    pub fn image_class(&self) -> VerClass {
        VerClass {
            p: self.p,
            mult: self.blocks.iter().map(|b| b.rank() as i64).collect(),
        }
    }

    pub fn kernel_class(&self) -> VerClass {
        &self.src_class() - &self.image_class()
    }

    pub fn coker_class(&self) -> VerClass {
        &self.dst_class() - &self.image_class()
    }

    /// Per-simple kernel bases (columns).
    pub fn kernel_bases(&self) -> Vec<FpMatrix> {
        self.blocks.iter().map(|b| b.kernel_basis()).collect()
    }

    /// Per-simple image bases (columns).
    pub fn image_bases(&self) -> Vec<FpMatrix> {
        self.blocks.iter().map(|b| b.image_basis()).collect()
    }

    /// Per-simple cokernel data: standard basis vectors completing the image,
    /// as columns of the target (a deterministic complement).
    pub fn coker_complements(&self) -> Vec<FpMatrix> {
        self.blocks
            .iter()
            .map(|b| {
                let p = b.prime();
                let n = b.rows();
                let (_, piv) = FpMatrix::hstack(&[b, &FpMatrix::identity(p, n)]).unwrap().rref();
                let extra: Vec<usize> = piv.iter().filter(|&&c| c >= b.cols()).map(|c| c - b.cols()).collect();
                FpMatrix::identity(p, n).select_cols(&extra)
            })
            .collect()
    }
}

/// Ver-matrix of `f: X → Y`: blocks `funcs^Y_m · f · socles^X_m`.
pub fn ver_matrix(f: &FpMatrix, sx: &SSData, sy: &SSData) -> Result<VerMorphism> {
    if f.shape() != (sy.dim, sx.dim) {
        return Err(Error::ShapeMismatch(format!(
            "morphism {}x{} between objects of dims {} and {}",
            f.rows(),
            f.cols(),
            sx.dim,
            sy.dim
        )));
    }
    let blocks = (1..sx.p.usize())
        .map(|m| sy.split(m).funcs.mul(&f.mul(&sx.split(m).socles)?))
        .collect::<Result<_>>()?;
    Ok(VerMorphism { p: sx.p, blocks })
}

/// Ver-matrix of a morphism given as a function on column vectors.
pub fn ver_matrix_with(
    apply: impl Fn(&[u32]) -> Vec<u32>,
    sx: &SSData,
    sy: &SSData,
) -> Result<VerMorphism> {
    let p = sx.p;
    let mut blocks = Vec::with_capacity(p.usize() - 1);
    for m in 1..p.usize() {
        let soc = &sx.split(m).socles;
        let cols: Vec<Vec<u32>> = (0..soc.cols()).map(|j| apply(&soc.col(j))).collect();
        let img = FpMatrix::from_columns(p, sy.dim, &cols);
        blocks.push(sy.split(m).funcs.mul(&img)?);
    }
    Ok(VerMorphism { p, blocks })
}

/// Ver-matrix of a basis permutation `e_i ↦ e_{map[i]}` of one object.
pub fn ver_matrix_of_index_map(map: &[usize], sx: &SSData, sy: &SSData) -> Result<VerMorphism> {
    ver_matrix_with(
        |v| {
            let mut out = vec![0; v.len()];
            for (i, &x) in v.iter().enumerate() {
                out[map[i]] = x;
            }
            out
        },
        sx,
        sy,
    )
}

/// Class of an object from its Jordan type.
pub fn ver_class(x: &RepObject) -> VerClass {
    let jt = x.jordan_type();
    let p = x.prime();
    VerClass {
        p,
        mult: (1..p.usize()).map(|m| jt.count(m) as i64).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{jordan_object, jordan_sum};

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    #[test]
    fn projective_is_negligible() {
        let x = jordan_object(p5(), 5).unwrap();
        let s = decompose(&x).unwrap();
        assert!(s.class().is_zero());
    }

    #[test]
    fn decompose_small() {
        let j2 = jordan_object(p5(), 2).unwrap();
        let x = j2.tensor(&j2);
        let s = decompose(&x).unwrap();
        assert!(s.verify(&x));
        assert_eq!(s.class().mults(), &[1, 0, 1, 0]);
        let s2 = decompose_via_jordan(&x).unwrap();
        assert!(s2.verify(&x));
        assert_eq!(s2.class(), s.class());
    }

    #[test]
    fn odd_line_swap() {
        let p = p5();
        let j4 = jordan_object(p, 4).unwrap();
        let x = j4.tensor(&j4);
        let s = decompose(&x).unwrap();
        let swap = crate::matrix::tensor_perm(p, &[4, 4], &[1, 0]).unwrap();
        let v = ver_matrix(&swap, &s, &s).unwrap();
        assert_eq!(v.block(1).data(), &[4]);
    }

    #[test]
    fn swap_eigenspaces() {
        let p = p5();
        let j2 = jordan_object(p, 2).unwrap();
        let x = j2.tensor(&j2);
        let s = decompose(&x).unwrap();
        let swap = crate::matrix::tensor_perm(p, &[2, 2], &[1, 0]).unwrap();
        let v = ver_matrix(&swap, &s, &s).unwrap();
        let id = VerMorphism::identity(&s.class());
        let plus = v.add(&id.scale(p.neg(1))).unwrap();
        let minus = v.add(&id).unwrap();
        assert_eq!(plus.kernel_class(), VerClass::simple(p, 3).unwrap());
        assert_eq!(minus.kernel_class(), VerClass::simple(p, 1).unwrap());
    }

    #[test]
    fn identity_and_zero_classes() {
        let x = jordan_sum(p5(), &[1, 3, 3, 5]).unwrap();
        let s = decompose(&x).unwrap();
        let v = ver_matrix(&FpMatrix::identity(p5(), x.dim()), &s, &s).unwrap();
        assert_eq!(v, VerMorphism::identity(&s.class()));
        assert_eq!(v.image_class(), s.class());
        let z = ver_matrix(&FpMatrix::zeros(p5(), x.dim(), x.dim()), &s, &s).unwrap();
        assert_eq!(z.kernel_class(), s.class());
    }

    #[test]
    fn display() {
        let c = &VerClass::simple(p5(), 1).unwrap() + &VerClass::simple(p5(), 3).unwrap().scale(2);
        assert_eq!(c.to_string(), "L1 + 2*L3");
        assert_eq!(VerClass::zero(p5()).to_string(), "0");
    }
}
