//! Free operadic Lie algebras in Ver_p: FOLie_n, FLie_n, FRLie_n and the
//! kernels E_n, computed from the action of S_n on Ver-matrices of `V^{⊗n}`;
//! the S_p-module facts about R_p and `L_2^{⊗p}`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{inconsistent, Error, Result};
use crate::fp::Prime;
use crate::lie_operad::{lie_basis, sn_action};
use crate::matrix::{tensor_perm_map, FpMatrix};
use crate::rep::tensor_power_jordan_basis;
use crate::ring::class_power;
use crate::ss::{ver_matrix_of_index_map, SSData, VerClass, VerMorphism};
use crate::sym_group::{
    dynkin_theta_dual, is_projective_over_cyclic, rep_rp, right_annihilator, GroupAlgElem, Perm,
    MAX_GROUP_DEGREE,
};

/// Ver-matrices `W_σ = F(ρ(σ))` of the tensor-position action of S_n on `V^{⊗n}`.
pub struct TensorPowerAction {
    p: Prime,
    n: usize,
    v: VerClass,
    ss: SSData,
    mats: HashMap<Perm, VerMorphism>,
}

impl TensorPowerAction {
    pub fn new(v: &VerClass, n: usize) -> Result<TensorPowerAction> {
        let p = v.prime();
        if n == 0 || n > MAX_GROUP_DEGREE {
            return Err(Error::DegreeTooLarge(format!("tensor degree {n} outside 1..={MAX_GROUP_DEGREE}")));
        }
        if !v.is_nonnegative() {
            return Err(Error::OutOfRange(format!("{v} is not an object")));
        }
        let sizes = v.lift_sizes()?;
        let d: usize = sizes.iter().sum();
        let jb = tensor_power_jordan_basis(p, &sizes, n)?;
        let ss = SSData::from_jordan_basis(p, &jb);
        let dims = vec![d; n];
        let gens: Vec<VerMorphism> = (0..n - 1)
            .map(|i| {
                let map = tensor_perm_map(&dims, &Perm::adjacent(n, i).images())?;
                ver_matrix_of_index_map(&map, &ss, &ss)
            })
            .collect::<Result<_>>()?;
        let id = Perm::identity(n);
        let mut mats = HashMap::new();
        mats.insert(id.clone(), VerMorphism::identity(&ss.class()));
        let mut frontier = vec![id];
        while let Some(s) = frontier.pop() {
            for (i, g) in gens.iter().enumerate() {
                let t = s.compose(&Perm::adjacent(n, i));
                if !mats.contains_key(&t) {
                    let m = mats[&s].compose(g)?;
                    mats.insert(t.clone(), m);
                    frontier.push(t);
                }
            }
        }
        Ok(TensorPowerAction {
            p,
            n,
            v: v.clone(),
            ss,
            mats,
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn object(&self) -> &VerClass {
        &self.v
    }

    /// Class of `V^{⊗n}`.
    pub fn class(&self) -> VerClass {
        self.ss.class()
    }

    pub fn splitting(&self) -> &SSData {
        &self.ss
    }

    pub fn of_perm(&self, s: &Perm) -> &VerMorphism {
        &self.mats[s]
    }

    /// `F(ρ(x)) = Σ x_σ W_σ`.
    pub fn of_elem(&self, x: &GroupAlgElem) -> VerMorphism {
        let c = self.class();
        let mut out = VerMorphism::zero(&c, &c);
        for (s, k) in x.terms() {
            let k = self.p.reduce(k);
            if k != 0 {
                out = out.add(&self.mats[s].scale(k)).expect("same shape");
            }
        }
        out
    }

    /// The multiplicity space of `L_m` as an S_n-representation, keyed by permutation.
    pub fn multiplicity_rep(&self, m: usize) -> HashMap<Perm, FpMatrix> {
        self.mats.iter().map(|(s, w)| (s.clone(), w.block(m).clone())).collect()
    }
}

/// Per-simple matrices `R_τ = Σ_{τ'} c_{τ'τ} M(τ'^{-1} t) − M(τ^{-1})`, τ ∈ S_{n−1}.
///
/// The stabilizer of the letter 1 permutes the standard basis of Lie_n
/// freely, so `(X ⊗ Lie_n)_{S_{n−1}} ≅ X` via `x ⊗ (b∘τ) ↦ τ^{-1}x`; the
/// remaining generator `t = (1 2)` contributes the relations `R_τ`, and
/// `(X ⊗ Lie_n)_{S_n}` is the cokernel of all of them together.
pub(crate) fn lie_coinvariant_relations<M: Clone>(
    n: usize,
    mat: impl Fn(&Perm) -> M,
    add: impl Fn(&M, &M, i64) -> M,
    zero: M,
) -> Vec<M> {
    let t = Perm::adjacent(n, 0);
    let mt = sn_action(n, &t);
    let basis = lie_basis(n);
    basis
        .iter()
        .enumerate()
        .map(|(j, tau)| {
            let mut acc = add(&zero, &mat(&tau.inverse()), -1);
            for (i, tp) in basis.iter().enumerate() {
                let c = mt.get(i, j);
                if c != 0 {
                    acc = add(&acc, &mat(&tp.inverse().compose(&t)), c);
                }
            }
            acc
        })
        .collect()
}

/// FOLie_n, FLie_n and E_n of an object.
#[derive(Clone, Debug, Serialize)]
pub struct FreeLieReport {
    pub v: VerClass,
    pub n: usize,
    pub tensor_class: VerClass,
    pub folie: VerClass,
    pub flie: VerClass,
    pub e: VerClass,
    /// Which quotient description produced `folie`.
    pub route: String,
    /// Per-simple complements of the relation image (columns), i.e. bases of FOLie_n.
    #[serde(skip)]
    pub folie_bases: Vec<FpMatrix>,
}

/// The relation map whose cokernel is FOLie_n, from the right annihilator of θ_n^∨.
pub fn annihilator_relations(act: &TensorPowerAction) -> Result<VerMorphism> {
    let p = act.prime();
    let ann = right_annihilator(&dynkin_theta_dual(act.degree()), p)?;
    let parts: Vec<VerMorphism> = ann.iter().map(|a| act.of_elem(a)).collect();
    if parts.is_empty() {
        let c = act.class();
        return Ok(VerMorphism::zero(&VerClass::zero(p), &c));
    }
    VerMorphism::hstack(&parts.iter().collect::<Vec<_>>())
}

/// The relation map whose cokernel is FOLie_n, from coinvariants of `V^{⊗n} ⊗ Lie_n`.
pub fn coinvariant_relations(act: &TensorPowerAction) -> Result<VerMorphism> {
    let n = act.degree();
    let c = act.class();
    if n == 1 {
        return Ok(VerMorphism::zero(&VerClass::zero(act.prime()), &c));
    }
    let p = act.prime();
    let rel = lie_coinvariant_relations(
        n,
        |s| act.of_perm(s).clone(),
        |a, b, k| a.add(&b.scale(p.reduce(k))).expect("same shape"),
        VerMorphism::zero(&c, &c),
    );
    VerMorphism::hstack(&rel.iter().collect::<Vec<_>>())
}

fn check_theta_kills(theta: &VerMorphism, rel: &VerMorphism) -> Result<()> {
    if !theta.compose(rel)?.is_zero() {
        return Err(inconsistent("θ^∨ does not vanish on the FOLie relations"));
    }
    Ok(())
}

/// Free Lie data of degree n. For `n ≤ 6` FOLie_n is computed from the
/// annihilator and cross-checked against coinvariants; at `n = 7` only
/// the coinvariant description is used.
pub fn free_lie_report(v: &VerClass, n: usize) -> Result<FreeLieReport> {
    let act = TensorPowerAction::new(v, n)?;
    free_lie_report_with(&act)
}

pub fn free_lie_report_with(act: &TensorPowerAction) -> Result<FreeLieReport> {
    let n = act.degree();
    let theta = act.of_elem(&dynkin_theta_dual(n));
    let coinv = coinvariant_relations(act)?;
    check_theta_kills(&theta, &coinv)?;
    let mut route = "coinvariants".to_string();
    if n < MAX_GROUP_DEGREE {
        let ann = annihilator_relations(act)?;
        check_theta_kills(&theta, &ann)?;
        if ann.image_class() != coinv.image_class() {
            return Err(inconsistent(format!(
                "annihilator and coinvariant descriptions of FOLie_{n} disagree: {} vs {}",
                ann.coker_class(),
                coinv.coker_class()
            )));
        }
        route = "annihilator (coinvariants agree)".into();
    }
    let folie = coinv.coker_class();
    let flie = theta.image_class();
    let e = &folie - &flie;
    if !e.is_nonnegative() {
        return Err(inconsistent(format!("E_{n} = {e} is negative")));
    }
    Ok(FreeLieReport {
        v: act.object().clone(),
        n,
        tensor_class: act.class(),
        folie,
        flie,
        e,
        route,
        folie_bases: coinv.coker_complements(),
    })
}

pub fn folie_class(v: &VerClass, n: usize) -> Result<VerClass> {
    Ok(free_lie_report(v, n)?.folie)
}

/// FLie_n as the image of `ρ(θ_n^∨)`.
pub fn flie_class_direct(v: &VerClass, n: usize) -> Result<VerClass> {
    let act = TensorPowerAction::new(v, n)?;
    Ok(act.of_elem(&dynkin_theta_dual(n)).image_class())
}

pub fn e_class(v: &VerClass, n: usize) -> Result<VerClass> {
    Ok(free_lie_report(v, n)?.e)
}

/// Largest `mult · (n−1)!` for which [`frlie_class`] builds its dense system.
pub const FRLIE_MAX_COLUMNS: usize = 6000;

/// FRLie_n: invariants of `V^{⊗n} ⊗ Lie_n`, the kernel of the stacked
/// `W_s ⊗ M_s − 1` over adjacent transpositions.
pub fn frlie_class(v: &VerClass, n: usize) -> Result<VerClass> {
    if n == 1 {
        return Ok(v.clone());
    }
    let act = TensorPowerAction::new(v, n)?;
    let p = act.prime();
    let lie: Vec<FpMatrix> = (0..n - 1).map(|i| sn_action(n, &Perm::adjacent(n, i)).to_fp(p)).collect();
    let k = lie[0].rows();
    let mut out = VerClass::zero(p);
    for m in 1..p.usize() {
        let mult = act.class().get(m) as usize;
        if mult == 0 {
            continue;
        }
        if mult * k > FRLIE_MAX_COLUMNS {
            return Err(Error::OutOfRange(format!(
                "FRLie_{n}: {} columns in the L{m} block exceed {FRLIE_MAX_COLUMNS}",
                mult * k
            )));
        }
        let id = FpMatrix::identity(p, mult * k);
        let rows: Vec<FpMatrix> = (0..n - 1)
            .map(|i| act.of_perm(&Perm::adjacent(n, i)).block(m).kron(&lie[i]).sub(&id))
            .collect::<Result<_>>()?;
        let stacked = FpMatrix::vstack(&rows.iter().collect::<Vec<_>>())?;
        out.set(m, (mult * k - stacked.rank()) as i64);
    }
    Ok(out)
}

/// Dimension of `(X ⊗ Lie_n)_{S_n}` for a representation given on every
/// permutation, with a vector of X whose image spans a complement of the
/// relations (one column per coinvariant dimension).
pub fn lie_coinvariants(n: usize, p: Prime, rep: &HashMap<Perm, FpMatrix>) -> Result<(usize, FpMatrix)> {
    let d = rep[&Perm::identity(n)].rows();
    if n == 1 {
        return Ok((d, FpMatrix::identity(p, d)));
    }
    let rel = lie_coinvariant_relations(
        n,
        |s| rep[s].clone(),
        |a, b, k| {
            let mut out = a.clone();
            out.add_scaled(p.reduce(k), b).expect("same shape");
            out
        },
        FpMatrix::zeros(p, d, d),
    );
    let stacked = FpMatrix::hstack(&rel.iter().collect::<Vec<_>>())?;
    let (_, piv) = FpMatrix::hstack(&[&stacked, &FpMatrix::identity(p, d)])?.rref();
    let extra: Vec<usize> = piv
        .iter()
        .filter(|&&c| c >= stacked.cols())
        .map(|c| c - stacked.cols())
        .collect();
    Ok((extra.len(), FpMatrix::identity(p, d).select_cols(&extra)))
}

/// `dim (X ⊗ Lie_n)_{S_n}` by brute force on the full tensor product.
pub fn lie_coinvariant_dim_direct(n: usize, p: Prime, rep: &HashMap<Perm, FpMatrix>) -> Result<usize> {
    let d = rep[&Perm::identity(n)].rows();
    let mut parts = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let s = Perm::adjacent(n, i);
        let l = sn_action(n, &s).to_fp(p);
        let m = rep[&s].kron(&l);
        parts.push(m.sub(&FpMatrix::identity(p, m.rows()))?);
    }
    let k = lie_basis(n).len();
    if parts.is_empty() {
        return Ok(d * k);
    }
    let stacked = FpMatrix::hstack(&parts.iter().collect::<Vec<_>>())?;
    Ok(d * k - stacked.rank())
}

/// Outcome of the R_p checks at a prime.
#[derive(Clone, Debug, Serialize)]
pub struct RpLemmas {
    pub p: u32,
    /// `dim (R_p ⊗ Lie_p)_{S_p}`.
    pub rp_lie_coinvariants: usize,
    /// Dimension of the `1_-`-multiplicity space of `L_2^{⊗p}`.
    pub odd_multiplicity: usize,
    /// An invertible S_p-intertwiner from that space to R_p was found.
    pub isomorphic_to_rp: bool,
    /// Simples `L_ℓ` (ℓ ≠ p−1) occurring in `L_2^{⊗p}`, with multiplicity.
    pub other_multiplicities: Vec<(usize, usize)>,
    /// Each of those multiplicity spaces is free over the cyclic subgroup.
    pub others_projective: bool,
    /// The intertwiner `T` with `R(σ) T = T W(σ)`.
    #[serde(skip)]
    pub intertwiner: Option<FpMatrix>,
}

/// Solutions `T` (a × b) of `A_i T = T B_i` for all i, as a basis of matrices.
pub fn intertwiners(a: &[FpMatrix], b: &[FpMatrix]) -> Result<Vec<FpMatrix>> {
    let p = a.first().map(|x| x.prime()).ok_or_else(|| Error::ShapeMismatch("no generators".into()))?;
    let (ra, rb) = (a[0].rows(), b[0].rows());
    let unknowns = ra * rb;
    let mut eqs = Vec::new();
    for (ai, bi) in a.iter().zip(b) {
        let mut m = FpMatrix::zeros(p, unknowns, unknowns);
        for i in 0..ra {
            for j in 0..rb {
                let row = i * rb + j;
                for k in 0..ra {
                    let v = ai.get(i, k);
                    if v != 0 {
                        let col = k * rb + j;
                        m.set(row, col, p.add(m.get(row, col), v));
                    }
                }
                for k in 0..rb {
                    let v = bi.get(k, j);
                    if v != 0 {
                        let col = i * rb + k;
                        m.set(row, col, p.sub(m.get(row, col), v));
                    }
                }
            }
        }
        eqs.push(m);
    }
    let stacked = FpMatrix::vstack(&eqs.iter().collect::<Vec<_>>())?;
    let ker = stacked.kernel_basis();
    Ok((0..ker.cols())
        .map(|c| {
            let v = ker.col(c);
            FpMatrix::from_fn(p, ra, rb, |i, j| v[i * rb + j] as i64)
        })
        .collect())
}

/// The R_p facts: coinvariants of `R_p ⊗ Lie_p`, the `1_-`-isotypic part
/// of `L_2^{⊗p}` as an S_p-module, and projectivity of the other parts.
pub fn rp_multiplicity_lemmas(p: Prime) -> Result<RpLemmas> {
    let n = p.usize();
    let rp = rep_rp(p);
    let rmats = rp.all_matrices();
    let (coinv, _) = lie_coinvariants(n, p, &rmats)?;

    let act = TensorPowerAction::new(&VerClass::simple(p, 2)?, n)?;
    let class = act.class();
    let odd = class.get(n - 1) as usize;
    let gens: Vec<Perm> = (0..n - 1).map(|i| Perm::adjacent(n, i)).collect();
    let a: Vec<FpMatrix> = gens.iter().map(|s| rmats[s].clone()).collect();
    let b: Vec<FpMatrix> = gens.iter().map(|s| act.of_perm(s).block(n - 1).clone()).collect();
    let mut intertwiner = None;
    if odd == rp.dim() {
        for t in intertwiners(&a, &b)? {
            if t.inverse().is_some() {
                intertwiner = Some(t);
                break;
            }
        }
    }
    let cycle = Perm::from_images(&(0..n).map(|k| (k + 1) % n).collect::<Vec<_>>())?;
    let mut others = Vec::new();
    let mut projective = true;
    for m in 1..n - 1 {
        let k = class.get(m) as usize;
        if k > 0 {
            others.push((m, k));
            projective &= is_projective_over_cyclic(act.of_perm(&cycle).block(m), p);
        }
    }
    Ok(RpLemmas {
        p: p.get(),
        rp_lie_coinvariants: coinv,
        odd_multiplicity: odd,
        isomorphic_to_rp: intertwiner.is_some(),
        other_multiplicities: others,
        others_projective: projective,
        intertwiner,
    })
}

/// `[V^{⊗n}]` from the fusion ring, for comparison with the computed class.
pub fn tensor_class_oracle(v: &VerClass, n: usize) -> VerClass {
    class_power(v, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn l(p: Prime, m: usize) -> VerClass {
        VerClass::simple(p, m).unwrap()
    }

    fn cls(p: Prime, mults: &[i64]) -> VerClass {
        VerClass::from_mults(p, mults.to_vec()).unwrap()
    }

    #[test]
    fn tensor_power_class_matches_fusion() {
        let p = p5();
        let act = TensorPowerAction::new(&l(p, 2), 5).unwrap();
        assert_eq!(act.class(), tensor_class_oracle(&l(p, 2), 5));
        assert_eq!(act.class(), cls(p, &[0, 5, 0, 3]));
    }

    #[test]
    fn folie_l2() {
        let p = p5();
        let expect = [cls(p, &[0, 1, 0, 0]), l(p, 1), l(p, 2), l(p, 3), cls(p, &[0, 1, 0, 1])];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(&folie_class(&l(p, 2), k + 1).unwrap(), e, "n = {}", k + 1);
        }
    }

    #[test]
    fn e_classes() {
        let p = p5();
        for n in 2..5 {
            assert!(e_class(&l(p, 2), n).unwrap().is_zero());
        }
        assert_eq!(e_class(&l(p, 2), 5).unwrap(), l(p, 4));
        assert!(e_class(&l(p, 3), 5).unwrap().is_zero());
        assert!(e_class(&l(p, 4), 5).unwrap().is_zero());
        assert_eq!(flie_class_direct(&l(p, 2), 5).unwrap(), l(p, 2));
    }

    #[test]
    fn e3_at_p3() {
        let p = Prime::new(3).unwrap();
        assert_eq!(e_class(&l(p, 2), 3).unwrap(), l(p, 2));
    }

    #[test]
    fn frlie_small() {
        let p = p5();
        assert_eq!(frlie_class(&l(p, 2), 1).unwrap(), l(p, 2));
        for n in 2..4 {
            assert_eq!(frlie_class(&l(p, 2), n).unwrap(), flie_class_direct(&l(p, 2), n).unwrap());
        }
    }

    #[test]
    fn rp_lemmas_p5() {
        let r = rp_multiplicity_lemmas(p5()).unwrap();
        assert_eq!(r.rp_lie_coinvariants, 1);
        assert_eq!(r.odd_multiplicity, 3);
        assert!(r.isomorphic_to_rp);
        assert!(r.others_projective);
        assert_eq!(r.other_multiplicities, vec![(2, 5)]);
    }

    #[test]
    fn coinvariant_shortcut_matches_direct() {
        let p = p5();
        let rmats = rep_rp(p).all_matrices();
        assert_eq!(lie_coinvariants(5, p, &rmats).unwrap().0, lie_coinvariant_dim_direct(5, p, &rmats).unwrap());
        let triv = crate::sym_group::rep_trivial(4, p).all_matrices();
        assert_eq!(lie_coinvariants(4, p, &triv).unwrap().0, 0);
        assert_eq!(lie_coinvariant_dim_direct(4, p, &triv).unwrap(), 0);
    }
}
