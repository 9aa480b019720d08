//! Operadic Lie algebras in Ver_p given by explicit brackets: `gl(X)` and
//! the truncated free algebra `FOLie(V)_{≤n}`; the p-Jacobi map γ_p and the
//! PBW class comparison.

use serde::Serialize;

use crate::error::{inconsistent, Error, Result};
use crate::fp::Prime;
use crate::free_lie::{free_lie_report_with, lie_coinvariant_relations, lie_coinvariants, TensorPowerAction};
use crate::lie_operad::{lie_basis, operad_bracket, sn_action, LieElement};
use crate::matrix::{tensor_perm_map, FpMatrix};
use crate::rep::{jordan_basis, jordan_sum, tensor_jordan_basis, PairBases, RepObject};
use crate::ring::{class_power, h_series, ClassSeries};
use crate::ss::{ver_matrix, SSData, VerClass, VerMorphism};
use crate::sym_group::{GroupAlgElem, Perm};

/// A lift `Σ r_α ⊗ ℓ_α` of the generator of `(M ⊗ Lie_p)_{S_p}`, where M
/// is the `1_-`-multiplicity space of `L_2^{⊗p}`.
#[derive(Clone, Debug)]
pub struct GammaLift {
    pub terms: Vec<(Vec<u32>, LieElement)>,
}

/// Data shared by every evaluation of γ_p at a prime: the splitting of
/// `L_2^{⊗p}` and several lifts of the coinvariant generator τ_p.
pub struct GammaContext {
    p: Prime,
    act: TensorPowerAction,
    lifts: Vec<GammaLift>,
}

impl GammaContext {
    pub fn new(p: Prime) -> Result<GammaContext> {
        let n = p.usize();
        let act = TensorPowerAction::new(&VerClass::simple(p, 2)?, n)?;
        let rep = act.multiplicity_rep(n - 1);
        let (dim, complement) = lie_coinvariants(n, p, &rep)?;
        if dim != 1 {
            return Err(inconsistent(format!("(M ⊗ Lie_{n})_(S_{n}) has dimension {dim}, expected 1")));
        }
        let r0 = complement.col(0);
        let mul = |s: &Perm, r: &[u32]| rep[s].mul_vec(r);
        // the basic lift r0 ⊗ b_p
        let a = GammaLift {
            terms: vec![(r0.clone(), LieElement::b(n))],
        };
        // τ r0 ⊗ b_p∘τ for τ cycling the letters 2..p
        let tau = Perm::from_images(&(0..n).map(|k| if k == 0 { 0 } else { k % (n - 1) + 1 }).collect::<Vec<_>>())?;
        let b = GammaLift {
            terms: vec![(mul(&tau, &r0), LieElement::basis(tau.clone())?)],
        };
        // add the relation t·(r0 ⊗ b_p) − r0 ⊗ b_p
        let t = Perm::adjacent(n, 0);
        let mt = sn_action(n, &t);
        let basis = lie_basis(n);
        let t_b = LieElement::from_coords(n, basis.iter().enumerate().map(|(i, s)| (s.clone(), mt.get(i, 0))))?;
        let neg: Vec<u32> = r0.iter().map(|&x| p.neg(x)).collect();
        let c = GammaLift {
            terms: vec![
                (r0.clone(), LieElement::b(n)),
                (mul(&t, &r0), t_b),
                (neg, LieElement::b(n)),
            ],
        };
        Ok(GammaContext {
            p,
            act,
            lifts: vec![a, b, c],
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn lifts(&self) -> &[GammaLift] {
        &self.lifts
    }

    /// `i_p(r)` evaluated on the socle of `1_-`: a vector of `J_2^{⊗p}`.
    fn socle_vector(&self, r: &[u32]) -> Vec<u32> {
        let s = &self.act.splitting().split(self.p.usize() - 1).socles;
        s.mul_vec(r)
    }
}

/// Anything γ_p can be evaluated on.
const MAX_IDENTITY_DIM: usize = 4;

pub trait PJacobi {
    /// `dim Hom(L_2, L)`.
    fn hom_l2_dim(&self) -> usize;
    /// `dim Hom(1_-, L)` in the component receiving γ_p.
    fn target_dim(&self) -> usize;
    /// γ_p(x) computed with a particular lift of τ_p.
    fn gamma_with(&self, ctx: &GammaContext, lift: &GammaLift, x: &[u32]) -> Result<Vec<u32>>;

    fn gamma(&self, ctx: &GammaContext, x: &[u32]) -> Result<Vec<u32>> {
        self.gamma_with(ctx, &ctx.lifts[0], x)
    }

    /// All lifts give the same value at `x`.
    fn lift_independent(&self, ctx: &GammaContext, x: &[u32]) -> Result<bool> {
        let first = self.gamma_with(ctx, &ctx.lifts[0], x)?;
        for l in &ctx.lifts[1..] {
            if self.gamma_with(ctx, l, x)? != first {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix with columns γ_p(e_i) over the basis of `Hom(L_2, L)`.
    /// Over F_p the Frobenius twist is trivial, so this determines γ_p.
    fn gamma_matrix(&self, ctx: &GammaContext) -> Result<FpMatrix> {
        let p = ctx.prime();
        let k = self.hom_l2_dim();
        let cols: Vec<Vec<u32>> = (0..k)
            .map(|i| {
                let mut e = vec![0; k];
                e[i] = 1;
                self.gamma(ctx, &e)
            })
            .collect::<Result<_>>()?;
        Ok(FpMatrix::from_columns(p, self.target_dim(), &cols))
    }
}

fn check_hom_vector(x: &[u32], k: usize) -> Result<()> {
    if x.len() != k {
        return Err(Error::ShapeMismatch(format!(
            "element of Hom(L2, L) needs {k} coordinates, got {}",
            x.len()
        )));
    }
    Ok(())
}

/// `gl(X) = End(X)` with the commutator bracket, Z/p acting by conjugation.
pub struct GlAlgebra {
    p: Prime,
    d: usize,
    g: RepObject,
    ss: SSData,
    bracket: FpMatrix,
}

impl GlAlgebra {
    pub fn new(v: &VerClass) -> Result<GlAlgebra> {
        let p = v.prime();
        let x = jordan_sum(p, &v.lift_sizes()?)?;
        let d = x.dim();
        let u = x.generator();
        let u_inv = u.inverse().ok_or_else(|| inconsistent("unipotent operator is singular"))?;
        let g = RepObject::new(u.kron(&u_inv.transpose()))?;
        let ss = SSData::from_jordan_basis(p, &jordan_basis(&g)?);
        let d2 = d * d;
        let mut bracket = FpMatrix::zeros(p, d2, d2 * d2);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let col = (i * d + j) * d2 + k * d + l;
                        if j == k {
                            let r = i * d + l;
                            bracket.set(r, col, p.add(bracket.get(r, col), 1));
                        }
                        if l == i {
                            let r = k * d + j;
                            bracket.set(r, col, p.sub(bracket.get(r, col), 1));
                        }
                    }
                }
            }
        }
        Ok(GlAlgebra { p, d, g, ss, bracket })
    }

    pub fn class(&self) -> VerClass {
        self.ss.class()
    }

    pub fn object(&self) -> &RepObject {
        &self.g
    }

    /// The Rep-level bracket `G ⊗ G → G`.
    pub fn bracket(&self) -> &FpMatrix {
        &self.bracket
    }

    /// Ver-level antisymmetry and Jacobi identity, plus equivariance of the bracket.
    /// Refuses `dim X > 4`, where the dense `G^{⊗3}` permutations no longer fit.
    pub fn identities_hold(&self) -> Result<bool> {
        let p = self.p;
        let n = self.g.dim();
        if self.d > MAX_IDENTITY_DIM {
            return Err(Error::OutOfRange(format!(
                "Jacobi check on gl of a {}-dimensional object (limit {MAX_IDENTITY_DIM})",
                self.d
            )));
        }
        let gg = self.g.tensor(&self.g);
        if !gg.intertwines(&self.g, &self.bracket) {
            return Ok(false);
        }
        let jg = jordan_basis(&self.g)?;
        let mut pairs = PairBases::default();
        let jgg = tensor_jordan_basis(p, &jg, &jg, &mut pairs)?;
        let ss2 = SSData::from_jordan_basis(p, &jgg);
        let swap = crate::matrix::tensor_perm(p, &[n, n], &[1, 0])?;
        let anti = self.bracket.mul(&swap)?.add(&self.bracket)?;
        if !ver_matrix(&anti, &ss2, &self.ss)?.is_zero() {
            return Ok(false);
        }
        let jggg = tensor_jordan_basis(p, &jgg, &jg, &mut pairs)?;
        let ss3 = SSData::from_jordan_basis(p, &jggg);
        let inner = self.bracket.kron(&FpMatrix::identity(p, n));
        let bb = self.bracket.mul(&inner)?;
        let c1 = crate::matrix::tensor_perm(p, &[n, n, n], &[2, 0, 1])?;
        let c2 = c1.mul(&c1)?;
        let jac = bb.add(&bb.mul(&c1)?)?.add(&bb.mul(&c2)?)?;
        Ok(ver_matrix(&jac, &ss3, &self.ss)?.is_zero())
    }

    /// The summands isomorphic to `1` act by zero in Ver_p.
    pub fn unit_block_central(&self) -> Result<bool> {
        let p = self.p;
        let d2 = self.d * self.d;
        let gens = &self.ss.split(1).gens;
        for c in 0..gens.cols() {
            let g = gens.col(c);
            // ad_g = β(g ⊗ −)
            let ad = FpMatrix::from_fn(p, d2, d2, |r, s| {
                let mut acc = 0;
                for (k, &gk) in g.iter().enumerate() {
                    if gk != 0 {
                        acc = p.add(acc, p.mul(gk, self.bracket.get(r, k * d2 + s)));
                    }
                }
                acc as i64
            });
            if !ver_matrix(&ad, &self.ss, &self.ss)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn as_matrix(&self, v: &[u32]) -> FpMatrix {
        FpMatrix::from_fn(self.p, self.d, self.d, |i, j| v[i * self.d + j] as i64)
    }
}

/// Evaluates `Σ c_w A_{w_1} ⋯ A_{w_n}` for ℓ with word expansion `Σ c_w w`.
fn eval_in_associative(ell: &LieElement, mats: &[FpMatrix]) -> Result<FpMatrix> {
    let p = mats[0].prime();
    let d = mats[0].rows();
    let mut out = FpMatrix::zeros(p, d, d);
    for (w, c) in ell.expand().terms() {
        let mut prod = FpMatrix::identity(p, d);
        for k in 0..w.n() {
            prod = prod.mul(&mats[w.apply(k)])?;
        }
        out.add_scaled(p.reduce(c), &prod)?;
    }
    Ok(out)
}

/// Nonzero entries of a vector of `(F_p^2)^{⊗n}` with their binary digits.
fn binary_terms(w: &[u32], n: usize) -> Vec<(Vec<usize>, u32)> {
    w.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(idx, &c)| ((0..n).map(|k| (idx >> (n - 1 - k)) & 1).collect(), c))
        .collect()
}

impl PJacobi for GlAlgebra {
    fn hom_l2_dim(&self) -> usize {
        self.ss.split(2).multiplicity()
    }

    fn target_dim(&self) -> usize {
        self.ss.split(self.p.usize() - 1).multiplicity()
    }

    fn gamma_with(&self, ctx: &GammaContext, lift: &GammaLift, x: &[u32]) -> Result<Vec<u32>> {
        let p = self.p;
        let n = p.usize();
        check_hom_vector(x, self.hom_l2_dim())?;
        let sp = self.ss.split(2);
        let images = [self.as_matrix(&sp.gens.mul_vec(x)), self.as_matrix(&sp.socles.mul_vec(x))];
        let mut acc = FpMatrix::zeros(p, self.d, self.d);
        for (r, ell) in &lift.terms {
            for (digits, c) in binary_terms(&ctx.socle_vector(r), n) {
                let mats: Vec<FpMatrix> = digits.iter().map(|&b| images[b].clone()).collect();
                acc.add_scaled(c, &eval_in_associative(ell, &mats)?)?;
            }
        }
        let flat: Vec<u32> = acc.data().to_vec();
        Ok(self.ss.split(n - 1).funcs.mul_vec(&flat))
    }
}

/// `FOLie(V)_{≤n}`: degree-k component is `V^{⊗k}` modulo the coinvariant
/// relations, and a class `v` in degree k stands for `v ⊗ b_k`.
pub struct TruncatedFree {
    p: Prime,
    v: VerClass,
    n: usize,
    acts: Vec<TensorPowerAction>,
    quotients: Vec<VerMorphism>,
    components: Vec<VerClass>,
}

/// Group algebra element of S_N acting on the first `k` positions.
fn embed(x: &GroupAlgElem, big: usize, shift: usize) -> GroupAlgElem {
    GroupAlgElem::from_terms(
        big,
        x.terms().map(|(s, c)| {
            let img: Vec<usize> = (0..big)
                .map(|k| if k >= shift && k < shift + s.n() { s.apply(k - shift) + shift } else { k })
                .collect();
            (Perm::from_images(&img).expect("permutation"), c)
        }),
    )
}

/// The tensor-position permutation listing blocks of `sizes` in `order`.
fn block_perm(sizes: &[usize], order: &[usize]) -> Perm {
    let total: usize = sizes.iter().sum();
    let mut start = vec![0; sizes.len()];
    for i in 1..sizes.len() {
        start[i] = start[i - 1] + sizes[i - 1];
    }
    let mut new_start = vec![0; sizes.len()];
    let mut pos = 0;
    for &b in order {
        new_start[b] = pos;
        pos += sizes[b];
    }
    let mut img = vec![0; total];
    for b in 0..sizes.len() {
        for j in 0..sizes[b] {
            img[start[b] + j] = new_start[b] + j;
        }
    }
    Perm::from_images(&img).expect("permutation")
}

impl TruncatedFree {
    /// Components of degree `1..=n`, for `n ≤ 7`.
    pub fn new(v: &VerClass, n: usize) -> Result<TruncatedFree> {
        let p = v.prime();
        let mut acts = Vec::with_capacity(n);
        let mut quotients = Vec::with_capacity(n);
        let mut components = Vec::with_capacity(n);
        for k in 1..=n {
            let act = TensorPowerAction::new(v, k)?;
            let rep = free_lie_report_with(&act)?;
            let rel = crate::free_lie::coinvariant_relations(&act)?;
            let blocks: Vec<FpMatrix> = rel
                .blocks()
                .iter()
                .map(|b| b.transpose().kernel_basis().transpose())
                .collect();
            let q = VerMorphism::new(p, blocks)?;
            if q.dst_class() != rep.folie {
                return Err(inconsistent("quotient map has the wrong rank"));
            }
            components.push(rep.folie);
            quotients.push(q);
            acts.push(act);
        }
        Ok(TruncatedFree {
            p,
            v: v.clone(),
            n,
            acts,
            quotients,
            components,
        })
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    /// `[L[k]]` for k = 1..=n.
    pub fn components(&self) -> &[VerClass] {
        &self.components
    }

    /// `β_{a,b} = Σ_τ c_τ τ^{-1}` where `[b_a, b_b] = Σ c_τ b∘τ` in Lie_{a+b}.
    pub fn bracket_element(a: usize, b: usize) -> Result<GroupAlgElem> {
        let br = operad_bracket(&LieElement::b(a), &LieElement::b(b))?;
        Ok(GroupAlgElem::from_terms(a + b, br.coords().map(|(s, c)| (s.inverse(), c))))
    }

    fn reduce(&self, deg: usize, x: &GroupAlgElem) -> Result<VerMorphism> {
        let w = self.acts[deg - 1].of_elem(x);
        self.quotients[deg - 1].compose(&w)
    }

    /// The bracket `L[a] ⊗ L[b] → L[a+b]` as a map out of `F(V^{⊗(a+b)})`.
    pub fn bracket_ver(&self, a: usize, b: usize) -> Result<Option<VerMorphism>> {
        if a + b > self.n {
            return Ok(None);
        }
        Ok(Some(self.reduce(a + b, &TruncatedFree::bracket_element(a, b)?)?))
    }

    /// The bracket descends to the quotients and is antisymmetric.
    pub fn antisymmetry_holds(&self, a: usize, b: usize) -> Result<bool> {
        let big = a + b;
        if big > self.n {
            return Ok(true);
        }
        let bab = TruncatedFree::bracket_element(a, b)?;
        let bba = TruncatedFree::bracket_element(b, a)?;
        let swap = GroupAlgElem::from_perm(block_perm(&[a, b], &[1, 0]), 1);
        if !self.reduce(big, &bba.mul(&swap).add(&bab))?.is_zero() {
            return Ok(false);
        }
        // relations of either factor are killed
        for (k, shift) in [(a, 0), (b, a)] {
            if k < 2 {
                continue;
            }
            let rels = lie_coinvariant_relations(
                k,
                |s: &Perm| GroupAlgElem::from_perm(s.clone(), 1),
                |x: &GroupAlgElem, y: &GroupAlgElem, c| x.add(&y.scale(c)),
                GroupAlgElem::zero(k),
            );
            for r in rels {
                if !self.reduce(big, &bab.mul(&embed(&r, big, shift)))?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` for x, y, z of degrees a, b, c.
    pub fn jacobi_holds(&self, a: usize, b: usize, c: usize) -> Result<bool> {
        let big = a + b + c;
        if big > self.n {
            return Ok(true);
        }
        let sizes = [a, b, c];
        let term = |i: usize, j: usize, k: usize, order: [usize; 3]| -> Result<GroupAlgElem> {
            let outer = TruncatedFree::bracket_element(sizes[i] + sizes[j], sizes[k])?;
            let inner = embed(&TruncatedFree::bracket_element(sizes[i], sizes[j])?, big, 0);
            let perm = GroupAlgElem::from_perm(block_perm(&sizes, &order), 1);
            Ok(outer.mul(&inner).mul(&perm))
        };
        let j = term(0, 1, 2, [0, 1, 2])?
            .add(&term(1, 2, 0, [1, 2, 0])?)
            .add(&term(2, 0, 1, [2, 0, 1])?);
        Ok(self.reduce(big, &j)?.is_zero())
    }

    /// Hom(L_2, L) splits by degree; this is the degree-1 part's dimension.
    fn degree_one_l2(&self) -> usize {
        self.v.get(2).max(0) as usize
    }
}

impl PJacobi for TruncatedFree {
    fn hom_l2_dim(&self) -> usize {
        self.components.iter().map(|c| c.get(2).max(0) as usize).sum()
    }

    fn target_dim(&self) -> usize {
        let n = self.p.usize();
        if self.n < n {
            0
        } else {
            self.components[n - 1].get(n - 1).max(0) as usize
        }
    }

    /// Coordinates of x are grouped by degree, degree 1 first. Only the
    /// degree-1 part contributes: any other p-fold bracket has degree above p.
    fn gamma_with(&self, ctx: &GammaContext, lift: &GammaLift, x: &[u32]) -> Result<Vec<u32>> {
        let p = self.p;
        let n = p.usize();
        check_hom_vector(x, self.hom_l2_dim())?;
        if self.n < n {
            return Ok(Vec::new());
        }
        let k1 = self.degree_one_l2();
        let sp1 = self.acts[0].splitting().split(2);
        let d = self.acts[0].splitting().dim();
        let images = [sp1.gens.mul_vec(&x[..k1]), sp1.socles.mul_vec(&x[..k1])];
        let top = &self.acts[n - 1];
        let dims = vec![d; n];
        let mut acc = vec![0u32; d.pow(n as u32)];
        for (r, ell) in &lift.terms {
            let mut y = vec![0u32; acc.len()];
            for (digits, c) in binary_terms(&ctx.socle_vector(r), n) {
                // X e_{i_1} ⊗ … ⊗ X e_{i_n}
                let mut t = vec![c];
                for &b in &digits {
                    let f = &images[b];
                    let mut next = vec![0u32; t.len() * d];
                    for (i, &ti) in t.iter().enumerate() {
                        if ti == 0 {
                            continue;
                        }
                        for (j, &fj) in f.iter().enumerate() {
                            next[i * d + j] = p.mul(ti, fj);
                        }
                    }
                    t = next;
                }
                for (a, b) in y.iter_mut().zip(&t) {
                    *a = p.add(*a, *b);
                }
            }
            for (tau, c) in ell.coords() {
                let map = tensor_perm_map(&dims, &tau.inverse().images())?;
                let c = p.reduce(c);
                for (src, &val) in y.iter().enumerate() {
                    if val != 0 {
                        acc[map[src]] = p.add(acc[map[src]], p.mul(c, val));
                    }
                }
            }
        }
        let mult = top.splitting().split(n - 1).funcs.mul_vec(&acc);
        Ok(self.quotients[n - 1].block(n - 1).mul_vec(&mult))
    }
}

/// One degree of the PBW comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwRow {
    pub degree: usize,
    pub s_side: VerClass,
    pub u_side: VerClass,
    pub difference: VerClass,
}

/// `[S(L)[d]]` against `[U(L)[d]] = [V^{⊗d}]` for `L = FOLie(V)_{≤n}`, d ≤ dmax ≤ n.
pub fn pbw_class_gap(components: &[VerClass], v: &VerClass, dmax: usize) -> Result<Vec<PbwRow>> {
    let n = components.len();
    if dmax > n {
        return Err(Error::OutOfRange(format!(
            "degree {dmax} exceeds the truncation {n}; U(L)[d] = V^(⊗d) only holds up to it"
        )));
    }
    let p = v.prime();
    let mut s = ClassSeries::one(p, dmax);
    for (k, c) in components.iter().enumerate() {
        s = s.mul(&h_series(c, dmax / (k + 1))?.substitute_power_to(k + 1, dmax));
    }
    Ok((1..=dmax)
        .map(|d| {
            let s_side = s.coefficient(d).clone();
            let u_side = class_power(v, d);
            let difference = &s_side - &u_side;
            PbwRow {
                degree: d,
                s_side,
                u_side,
                difference,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn cls(p: Prime, m: &[i64]) -> VerClass {
        VerClass::from_mults(p, m.to_vec()).unwrap()
    }

    #[test]
    fn gl_l2() {
        let p = p5();
        let g = GlAlgebra::new(&VerClass::simple(p, 2).unwrap()).unwrap();
        assert_eq!(g.class(), cls(p, &[1, 0, 1, 0]));
        assert!(g.identities_hold().unwrap());
        assert!(g.unit_block_central().unwrap());
        assert_eq!(g.hom_l2_dim(), 0);
    }

    #[test]
    fn gamma_vanishes_on_gl() {
        let p = p5();
        let ctx = GammaContext::new(p).unwrap();
        let g = GlAlgebra::new(&cls(p, &[1, 1, 0, 0])).unwrap();
        assert_eq!(g.hom_l2_dim(), 2);
        assert!(g.gamma_matrix(&ctx).unwrap().is_zero());
        assert!(g.lift_independent(&ctx, &[1, 2]).unwrap());
        let g = GlAlgebra::new(&cls(p, &[0, 1, 1, 0])).unwrap();
        assert_eq!((g.hom_l2_dim(), g.target_dim()), (2, 2));
        assert!(g.gamma_matrix(&ctx).unwrap().is_zero());
        assert!(g.lift_independent(&ctx, &[3, 1]).unwrap());
    }

    #[test]
    fn truncated_free_l2() {
        let p = p5();
        let v = VerClass::simple(p, 2).unwrap();
        let l = TruncatedFree::new(&v, 5).unwrap();
        assert_eq!(
            l.components(),
            &[cls(p, &[0, 1, 0, 0]), cls(p, &[1, 0, 0, 0]), cls(p, &[0, 1, 0, 0]), cls(p, &[0, 0, 1, 0]), cls(p, &[0, 1, 0, 1])]
        );
        assert_eq!(l.bracket_ver(1, 1).unwrap().unwrap().image_class(), VerClass::unit(p));
        for a in 1..5 {
            for b in 1..=5 - a {
                assert!(l.antisymmetry_holds(a, b).unwrap(), "({a},{b})");
            }
        }
        assert!(l.jacobi_holds(1, 1, 1).unwrap());
        assert!(l.jacobi_holds(1, 2, 2).unwrap());
        assert!(l.jacobi_holds(2, 1, 1).unwrap());
        let ctx = GammaContext::new(p).unwrap();
        assert_eq!(l.hom_l2_dim(), 3);
        let gm = l.gamma_matrix(&ctx).unwrap();
        assert_eq!(gm.rank(), 1);
        assert!(l.lift_independent(&ctx, &[1, 0, 0]).unwrap());
        assert!(l.lift_independent(&ctx, &[3, 1, 4]).unwrap());
    }

    #[test]
    fn pbw_gap_l2() {
        let p = p5();
        let v = VerClass::simple(p, 2).unwrap();
        let comps = [cls(p, &[0, 1, 0, 0]), cls(p, &[1, 0, 0, 0]), cls(p, &[0, 1, 0, 0]), cls(p, &[0, 0, 1, 0]), cls(p, &[0, 1, 0, 1])];
        let rows = pbw_class_gap(&comps, &v, 5).unwrap();
        for r in &rows[..4] {
            assert!(r.difference.is_zero(), "{r:?}");
        }
        assert_eq!(rows[4].s_side.get(4), 4);
        assert_eq!(rows[4].u_side.get(4), 3);
        assert_eq!(rows[4].difference, VerClass::odd_line(p));
        assert!(pbw_class_gap(&comps, &v, 6).is_err());
    }

    #[test]
    fn block_perm_swaps() {
        let s = block_perm(&[1, 2], &[1, 0]);
        assert_eq!(s.images(), vec![2, 0, 1]);
    }
}
