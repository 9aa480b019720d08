//! Koszul and De Rham complexes of an object of Ver_p, the periodic Koszul
//! complex of `L_m`, and the almost-Koszul bookkeeping derived from them.
//!
//! The bigraded object `SV ⊗ ΛV` is modelled on polynomial monomials times
//! wedge monomials in the coordinates of a Jordan-block lift `V = ⊕ J_{m_a}`.
//! For a summand with `m_a ≥ 2` the symmetric algebra of `L_{m_a}` vanishes
//! in degrees above `p − m_a`, so those monomials are discarded. Monomials
//! of bounded degree form a subcomplex for the De Rham differential (which
//! lowers polynomial degree) and a quotient complex for the Koszul
//! differential (which raises it); the discarded part is negligible, so
//! both descend to the correct complexes of Ver_p.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{inconsistent, Error, Result};
use crate::fp::Prime;
use crate::matrix::FpMatrix;
use crate::rep::{jordan_basis, jordan_sum, subsets, tensor_jordan_basis, JordanBasis, PairBases, RepObject};
use crate::ring::power_table;
use crate::ss::{ver_matrix, SSData, VerClass, VerMorphism};

/// One nonzero homology group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub degree: usize,
    pub diagonal: usize,
    pub class: VerClass,
}

/// Homology classes indexed by (homological degree, diagonal degree).
/// Zero classes are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct HomologyTable {
    p: Prime,
    entries: BTreeMap<(usize, usize), VerClass>,
}

impl HomologyTable {
    pub fn new(p: Prime) -> HomologyTable {
        HomologyTable {
            p,
            entries: BTreeMap::new(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Adds `c` to the entry at `(degree, diagonal)`.
    pub fn add(&mut self, degree: usize, diagonal: usize, c: &VerClass) {
        let cur = self.get(degree, diagonal);
        let next = &cur + c;
        if next.is_zero() {
            self.entries.remove(&(degree, diagonal));
        } else {
            self.entries.insert((degree, diagonal), next);
        }
    }

    pub fn get(&self, degree: usize, diagonal: usize) -> VerClass {
        self.entries
            .get(&(degree, diagonal))
            .cloned()
            .unwrap_or_else(|| VerClass::zero(self.p))
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), VerClass> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries with diagonal degree at most `d`.
    pub fn restrict(&self, d: usize) -> HomologyTable {
        HomologyTable {
            p: self.p,
            entries: self
                .entries
                .iter()
                .filter(|((_, r), _)| *r <= d)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Graded tensor product of two tables.
    pub fn tensor(&self, o: &HomologyTable) -> HomologyTable {
        let mut out = HomologyTable::new(self.p);
        for ((i, d), a) in &self.entries {
            for ((j, e), b) in &o.entries {
                out.add(i + j, d + e, &a.fuse(b));
            }
        }
        out
    }

    pub fn records(&self) -> Vec<HomologyEntry> {
        self.entries
            .iter()
            .map(|((degree, diagonal), class)| HomologyEntry {
                degree: *degree,
                diagonal: *diagonal,
                class: class.clone(),
            })
            .collect()
    }
}

impl fmt::Debug for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, ((i, d), c)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{d}): {c}")?;
        }
        write!(f, "}}")
    }
}

/// One bigraded piece `S^j V ⊗ Λ^i V`.
pub struct Term {
    pub monomials: Vec<Vec<usize>>,
    pub wedges: Vec<Vec<usize>>,
    pub object: RepObject,
    pub ss: SSData,
}

impl Term {
    pub fn dim(&self) -> usize {
        self.monomials.len() * self.wedges.len()
    }

    pub fn class(&self) -> VerClass {
        self.ss.class()
    }
}

struct Graded {
    basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    object: RepObject,
    jb: JordanBasis,
}

/// The bigraded object `SV ⊗ ΛV` with both differentials.
pub struct BigradedModel {
    p: Prime,
    v: VerClass,
    u: FpMatrix,
    summand: Vec<usize>,
    caps: Vec<Option<usize>>,
    truncated: bool,
    sym: HashMap<usize, Graded>,
    ext: HashMap<usize, Graded>,
    terms: HashMap<(usize, usize), Term>,
    pairs: PairBases,
}

impl BigradedModel {
    /// The Ver_p model: symmetric powers of each `L_m` (m ≥ 2) cut off above `p − m`.
    pub fn new(v: &VerClass) -> Result<BigradedModel> {
        BigradedModel::build(v, true)
    }

    /// The plain Rep(Z/p) model with no truncation, valid in degrees below p.
    pub fn untruncated(v: &VerClass) -> Result<BigradedModel> {
        BigradedModel::build(v, false)
    }

    fn build(v: &VerClass, truncated: bool) -> Result<BigradedModel> {
        let p = v.prime();
        if !v.is_nonnegative() {
            return Err(Error::OutOfRange(format!("{v} is not an object")));
        }
        if p.usize() > 3 && v.get(p.usize() - 1) > 0 || p.usize() == 3 && v.get(2) > 0 {
            return Err(Error::OutOfRange(
                "summands isomorphic to the odd line have unbounded exterior algebra; not modelled".into(),
            ));
        }
        let sizes = v.lift_sizes()?;
        let u = jordan_sum(p, &sizes)?.generator().clone();
        let mut summand = Vec::new();
        let mut caps = Vec::new();
        for (a, &m) in sizes.iter().enumerate() {
            summand.extend(std::iter::repeat_n(a, m));
            caps.push((truncated && m >= 2).then(|| p.usize() - m));
        }
        Ok(BigradedModel {
            p,
            v: v.clone(),
            u,
            summand,
            caps,
            truncated,
            sym: HashMap::new(),
            ext: HashMap::new(),
            terms: HashMap::new(),
            pairs: PairBases::default(),
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn object_class(&self) -> &VerClass {
        &self.v
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    fn dim_v(&self) -> usize {
        self.summand.len()
    }

    /// Largest diagonal degree carrying a nonzero term, or None if unbounded.
    pub fn max_diagonal(&self) -> Option<usize> {
        if !self.truncated {
            return None;
        }
        let mut total = self.dim_v();
        for c in &self.caps {
            total += (*c)?;
        }
        Some(total)
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if !self.truncated && d >= self.p.usize() {
            return Err(Error::DegreeTooLarge(format!(
                "the untruncated model is only valid in degrees below p = {}",
                self.p
            )));
        }
        Ok(())
    }

    fn monomials(&self, j: usize) -> Vec<Vec<usize>> {
        let n = self.dim_v();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(j);
        let mut load = vec![0usize; self.caps.len()];
        self.rec_monomials(n, j, 0, &mut cur, &mut load, &mut out);
        out
    }

    fn rec_monomials(
        &self,
        n: usize,
        j: usize,
        start: usize,
        cur: &mut Vec<usize>,
        load: &mut [usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for k in start..n {
            let a = self.summand[k];
            if self.caps[a].is_some_and(|c| load[a] >= c) {
                continue;
            }
            load[a] += 1;
            cur.push(k);
            self.rec_monomials(n, j, k, cur, load, out);
            cur.pop();
            load[a] -= 1;
        }
    }

    fn sym_graded(&mut self, j: usize) -> Result<&Graded> {
        if !self.sym.contains_key(&j) {
            let basis = self.monomials(j);
            let index: HashMap<Vec<usize>, usize> =
                basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
            let mat = substitution_matrix(&self.u, &basis, &index)?;
            let object = RepObject::new_unchecked(mat);
            let jb = jordan_basis(&object)?;
            self.sym.insert(j, Graded { basis, index, object, jb });
        }
        Ok(&self.sym[&j])
    }

    fn ext_graded(&mut self, i: usize) -> Result<&Graded> {
        if !self.ext.contains_key(&i) {
            let basis = subsets(self.dim_v(), i);
            let index: HashMap<Vec<usize>, usize> =
                basis.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
            let mat = minors_matrix(&self.u, &basis);
            let object = RepObject::new_unchecked(mat);
            let jb = jordan_basis(&object)?;
            self.ext.insert(i, Graded { basis, index, object, jb });
        }
        Ok(&self.ext[&i])
    }

    /// The piece `S^j V ⊗ Λ^i V`.
    pub fn term(&mut self, j: usize, i: usize) -> Result<&Term> {
        self.check_degree(i + j)?;
        if !self.terms.contains_key(&(j, i)) {
            let p = self.p;
            self.sym_graded(j)?;
            self.ext_graded(i)?;
            let (s, e) = (&self.sym[&j], &self.ext[&i]);
            let object = s.object.tensor(&e.object);
            let jb = tensor_jordan_basis(p, &s.jb, &e.jb, &mut self.pairs)?;
            let term = Term {
                monomials: s.basis.clone(),
                wedges: e.basis.clone(),
                object,
                ss: SSData::from_jordan_basis(p, &jb),
            };
            self.terms.insert((j, i), term);
        }
        Ok(&self.terms[&(j, i)])
    }

    /// Koszul differential `S^j ⊗ Λ^i → S^{j+1} ⊗ Λ^{i−1}`:
    /// `x^α ⊗ ξ_I ↦ Σ_r (−1)^r x_{k_r} x^α ⊗ ξ_{I ∖ k_r}`.
    pub fn koszul_matrix(&mut self, j: usize, i: usize) -> Result<FpMatrix> {
        let p = self.p;
        self.term(j, i)?;
        let nw_src = self.ext_graded(i)?.basis.len();
        if i == 0 {
            let cols = self.sym[&j].basis.len() * nw_src;
            return Ok(FpMatrix::zeros(p, 0, cols));
        }
        self.term(j + 1, i - 1)?;
        let (s0, s1) = (&self.sym[&j], &self.sym[&(j + 1)]);
        let (e0, e1) = (&self.ext[&i], &self.ext[&(i - 1)]);
        let nw_dst = e1.basis.len();
        let mut out = FpMatrix::zeros(p, s1.basis.len() * nw_dst, s0.basis.len() * nw_src);
        for (a, alpha) in s0.basis.iter().enumerate() {
            for (b, wedge) in e0.basis.iter().enumerate() {
                for r in 0..wedge.len() {
                    let k = wedge[r];
                    let mut beta = alpha.clone();
                    beta.insert(beta.partition_point(|&z| z <= k), k);
                    let Some(&ta) = s1.index.get(&beta) else { continue };
                    let mut rest = wedge.clone();
                    rest.remove(r);
                    let tb = e1.index[&rest];
                    let sign = if r % 2 == 0 { 1 } else { p.neg(1) };
                    let (row, col) = (ta * nw_dst + tb, a * nw_src + b);
                    out.set(row, col, p.add(out.get(row, col), sign));
                }
            }
        }
        Ok(out)
    }

    /// De Rham differential `S^j ⊗ Λ^i → S^{j−1} ⊗ Λ^{i+1}`:
    /// `x^α ⊗ ξ_I ↦ Σ_k (∂x^α/∂x_k) ⊗ ξ_k ∧ ξ_I`.
    pub fn de_rham_matrix(&mut self, j: usize, i: usize) -> Result<FpMatrix> {
        let p = self.p;
        self.term(j, i)?;
        let nw_src = self.ext_graded(i)?.basis.len();
        if j == 0 || i + 1 > self.dim_v() {
            let rows = if j == 0 { 0 } else { self.term(j - 1, i + 1)?.dim() };
            let cols = self.sym[&j].basis.len() * nw_src;
            return Ok(FpMatrix::zeros(p, rows, cols));
        }
        self.term(j - 1, i + 1)?;
        let (s0, s1) = (&self.sym[&j], &self.sym[&(j - 1)]);
        let (e0, e1) = (&self.ext[&i], &self.ext[&(i + 1)]);
        let nw_dst = e1.basis.len();
        let mut out = FpMatrix::zeros(p, s1.basis.len() * nw_dst, s0.basis.len() * nw_src);
        for (a, alpha) in s0.basis.iter().enumerate() {
            let mut letters: Vec<(usize, usize)> = Vec::new();
            for &k in alpha {
                match letters.last_mut() {
                    Some((l, c)) if *l == k => *c += 1,
                    _ => letters.push((k, 1)),
                }
            }
            for (b, wedge) in e0.basis.iter().enumerate() {
                for &(k, mult) in &letters {
                    if wedge.contains(&k) {
                        continue;
                    }
                    let mut beta = alpha.clone();
                    let pos = beta.iter().position(|&z| z == k).expect("letter present");
                    beta.remove(pos);
                    let ta = s1.index[&beta];
                    let before = wedge.iter().filter(|&&z| z < k).count();
                    let mut grown = wedge.clone();
                    grown.insert(before, k);
                    let tb = e1.index[&grown];
                    let mut c = p.reduce(mult as i64);
                    if before % 2 == 1 {
                        c = p.neg(c);
                    }
                    let (row, col) = (ta * nw_dst + tb, a * nw_src + b);
                    out.set(row, col, p.add(out.get(row, col), c));
                }
            }
        }
        Ok(out)
    }

    fn ver_of(&mut self, f: &FpMatrix, src: (usize, usize), dst: Option<(usize, usize)>) -> Result<VerMorphism> {
        let p = self.p;
        let sx = self.term(src.0, src.1)?.ss.clone();
        match dst {
            Some((j, i)) => {
                let sy = &self.term(j, i)?.ss;
                ver_matrix(f, &sx, sy)
            }
            None => Ok(VerMorphism::zero(&sx.class(), &VerClass::zero(p))),
        }
    }

    /// Ver-matrix of the Koszul differential out of `S^j ⊗ Λ^i`.
    pub fn koszul_ver(&mut self, j: usize, i: usize) -> Result<VerMorphism> {
        let f = self.koszul_matrix(j, i)?;
        self.ver_of(&f, (j, i), (i > 0).then(|| (j + 1, i - 1)))
    }

    /// Ver-matrix of the De Rham differential out of `S^j ⊗ Λ^i`.
    pub fn de_rham_ver(&mut self, j: usize, i: usize) -> Result<VerMorphism> {
        let f = self.de_rham_matrix(j, i)?;
        self.ver_of(&f, (j, i), (j > 0).then(|| (j - 1, i + 1)))
    }

    /// Classes of the terms `K^i[d]`, i = 0..=d.
    pub fn term_classes(&mut self, d: usize) -> Result<Vec<VerClass>> {
        (0..=d).map(|i| Ok(self.term(d - i, i)?.class())).collect()
    }

    /// Koszul homology in diagonal degree `d`, indexed by homological degree.
    pub fn koszul_homology(&mut self, d: usize) -> Result<BTreeMap<usize, VerClass>> {
        // out[i]: K^i[d] → K^{i−1}[d]
        let out: Vec<VerMorphism> = (0..=d).map(|i| self.koszul_ver(d - i, i)).collect::<Result<_>>()?;
        let mut h = BTreeMap::new();
        for i in 0..=d {
            let mut c = out[i].kernel_class();
            if i < d {
                c = &c - &out[i + 1].image_class();
            }
            if !c.is_nonnegative() {
                return Err(inconsistent(format!("negative homology {c} at ({i},{d})")));
            }
            if !c.is_zero() {
                h.insert(i, c);
            }
        }
        Ok(h)
    }

    /// De Rham cohomology in diagonal degree `d`, indexed by exterior degree.
    pub fn de_rham_cohomology(&mut self, d: usize) -> Result<BTreeMap<usize, VerClass>> {
        let out: Vec<VerMorphism> = (0..=d).map(|i| self.de_rham_ver(d - i, i)).collect::<Result<_>>()?;
        let mut h = BTreeMap::new();
        for i in 0..=d {
            let mut c = out[i].kernel_class();
            if i > 0 {
                c = &c - &out[i - 1].image_class();
            }
            if !c.is_nonnegative() {
                return Err(inconsistent(format!("negative cohomology {c} at ({i},{d})")));
            }
            if !c.is_zero() {
                h.insert(i, c);
            }
        }
        Ok(h)
    }

    /// Koszul homology in diagonal degrees `0..=dmax`.
    pub fn koszul_table(&mut self, dmax: usize) -> Result<HomologyTable> {
        let mut t = HomologyTable::new(self.p);
        for d in 0..=dmax {
            for (i, c) in self.koszul_homology(d)? {
                t.add(i, d, &c);
            }
        }
        Ok(t)
    }

    /// De Rham cohomology in diagonal degrees `0..=dmax`.
    pub fn de_rham_table(&mut self, dmax: usize) -> Result<HomologyTable> {
        let mut t = HomologyTable::new(self.p);
        for d in 0..=dmax {
            for (i, c) in self.de_rham_cohomology(d)? {
                t.add(i, d, &c);
            }
        }
        Ok(t)
    }

    /// `∂∂ = 0` and `dd = 0` on every piece of diagonal degree `d`, exactly.
    pub fn squares_vanish(&mut self, d: usize) -> Result<bool> {
        for i in 0..=d {
            let j = d - i;
            if i >= 2 {
                let a = self.koszul_matrix(j, i)?;
                let b = self.koszul_matrix(j + 1, i - 1)?;
                if !b.mul(&a)?.is_zero() {
                    return Ok(false);
                }
            }
            if j >= 2 {
                let a = self.de_rham_matrix(j, i)?;
                let b = self.de_rham_matrix(j - 1, i + 1)?;
                if !b.mul(&a)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `d∂ + ∂d = d·id` on every piece of diagonal degree `d`.
    ///
    /// On the untruncated model this is an identity of matrices. On the
    /// truncated model it is checked on Ver-matrices, since the discarded
    /// monomials break it on the nose at the top degree.
    pub fn cartan_holds(&mut self, d: usize) -> Result<bool> {
        let p = self.p;
        let scalar = p.reduce(d as i64);
        for i in 0..=d {
            let j = d - i;
            let dim = self.term(j, i)?.dim();
            if dim == 0 {
                continue;
            }
            if self.truncated {
                let class = self.term(j, i)?.class();
                let mut e = VerMorphism::zero(&class, &class);
                if i > 0 && self.term(j + 1, i - 1).is_ok() {
                    let del = self.koszul_ver(j, i)?;
                    let dr = self.de_rham_ver(j + 1, i - 1)?;
                    e = e.add(&dr.compose(&del)?)?;
                }
                if j > 0 {
                    let dr = self.de_rham_ver(j, i)?;
                    let del = self.koszul_ver(j - 1, i + 1)?;
                    e = e.add(&del.compose(&dr)?)?;
                }
                if e != VerMorphism::identity(&class).scale(scalar) {
                    return Ok(false);
                }
            } else {
                let mut e = FpMatrix::zeros(p, dim, dim);
                if i > 0 {
                    let del = self.koszul_matrix(j, i)?;
                    let dr = self.de_rham_matrix(j + 1, i - 1)?;
                    e = e.add(&dr.mul(&del)?)?;
                }
                if j > 0 {
                    let dr = self.de_rham_matrix(j, i)?;
                    let del = self.koszul_matrix(j - 1, i + 1)?;
                    e = e.add(&del.mul(&dr)?)?;
                }
                if e != FpMatrix::identity(p, dim).scale(scalar) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Both differentials intertwine the Z/p action on every piece of degree `d`.
    pub fn differentials_equivariant(&mut self, d: usize) -> Result<bool> {
        for i in 0..=d {
            let j = d - i;
            let src = self.term(j, i)?.object.clone();
            if i > 0 {
                let f = self.koszul_matrix(j, i)?;
                let dst = self.term(j + 1, i - 1)?.object.clone();
                if !src.intertwines(&dst, &f) {
                    return Ok(false);
                }
            }
            if j > 0 {
                let f = self.de_rham_matrix(j, i)?;
                let dst = self.term(j - 1, i + 1)?.object.clone();
                if !src.intertwines(&dst, &f) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Action on degree-j monomials by linear substitution `x_k ↦ Σ_l u_{lk} x_l`.
fn substitution_matrix(
    u: &FpMatrix,
    basis: &[Vec<usize>],
    index: &HashMap<Vec<usize>, usize>,
) -> Result<FpMatrix> {
    let p = u.prime();
    let n = u.rows();
    let cols_u: Vec<Vec<u32>> = (0..n).map(|j| u.col(j)).collect();
    let mut out = FpMatrix::zeros(p, basis.len(), basis.len());
    for (j, alpha) in basis.iter().enumerate() {
        let mut poly: HashMap<Vec<usize>, u32> = HashMap::from([(Vec::new(), 1)]);
        for &letter in alpha {
            let mut next: HashMap<Vec<usize>, u32> = HashMap::new();
            for (mono, c) in &poly {
                for (v, &coef) in cols_u[letter].iter().enumerate() {
                    if coef == 0 {
                        continue;
                    }
                    let mut m = mono.clone();
                    m.insert(m.partition_point(|&z| z <= v), v);
                    let e = next.entry(m).or_insert(0);
                    *e = p.add(*e, p.mul(*c, coef));
                }
            }
            poly = next;
        }
        for (mono, c) in poly {
            if c == 0 {
                continue;
            }
            let i = *index
                .get(&mono)
                .ok_or_else(|| inconsistent("substitution leaves the truncated monomials"))?;
            out.set(i, j, c);
        }
    }
    Ok(out)
}

/// Action on wedge monomials: the matrix of `b × b` minors of `u`.
fn minors_matrix(u: &FpMatrix, basis: &[Vec<usize>]) -> FpMatrix {
    let p = u.prime();
    let mut out = FpMatrix::zeros(p, basis.len(), basis.len());
    for (j, cols) in basis.iter().enumerate() {
        for (i, rows) in basis.iter().enumerate() {
            let minor = u.select_rows(rows).select_cols(cols);
            out.set(i, j, determinant(&minor));
        }
    }
    out
}

fn determinant(a: &FpMatrix) -> u32 {
    let p = a.prime();
    let n = a.rows();
    let mut m = a.clone();
    let mut det = 1;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| m.get(r, c) != 0) else {
            return 0;
        };
        if r != c {
            for k in 0..n {
                let (x, y) = (m.get(r, k), m.get(c, k));
                m.set(r, k, y);
                m.set(c, k, x);
            }
            det = p.neg(det);
        }
        let piv = m.get(c, c);
        det = p.mul(det, piv);
        let inv = p.inv(piv);
        for r2 in c + 1..n {
            let f = p.mul(m.get(r2, c), inv);
            if f == 0 {
                continue;
            }
            for k in c..n {
                let v = p.sub(m.get(r2, k), p.mul(f, m.get(c, k)));
                m.set(r2, k, v);
            }
        }
    }
    det
}

/// Koszul homology of `K^•(V)` in diagonal degrees `0..=dmax`.
pub fn koszul_homology(v: &VerClass, dmax: usize) -> Result<HomologyTable> {
    BigradedModel::new(v)?.koszul_table(dmax)
}

/// De Rham cohomology of `DR^•(V)` in diagonal degrees `0..=dmax`.
pub fn de_rham_cohomology(v: &VerClass, dmax: usize) -> Result<HomologyTable> {
    BigradedModel::new(v)?.de_rham_table(dmax)
}

/// The homology of `K^•(V)` predicted from its simple summands: `K^•(L_1)`
/// is exact, and `K^•(L_m)` for `2 ≤ m ≤ p−2` has `1` at (0,0) and
/// `1_-^{⊗m+1}` at (m, p); the whole is their graded tensor product.
pub fn kunneth_prediction(v: &VerClass) -> Result<HomologyTable> {
    let p = v.prime();
    let n = p.usize();
    let mut acc = HomologyTable::new(p);
    acc.add(0, 0, &VerClass::unit(p));
    for m in 1..n {
        let k = v.get(m);
        if k < 0 {
            return Err(Error::OutOfRange(format!("{v} is not an object")));
        }
        if k > 0 && m == n - 1 {
            return Err(Error::OutOfRange("odd-line summands are not modelled".into()));
        }
        let mut factor = HomologyTable::new(p);
        factor.add(0, 0, &VerClass::unit(p));
        if m >= 2 {
            factor.add(m, n, &odd_power(p, m + 1));
        }
        for _ in 0..k {
            acc = acc.tensor(&factor);
        }
    }
    Ok(acc)
}

/// `1_-^{⊗k}`.
pub fn odd_power(p: Prime, k: usize) -> VerClass {
    if k % 2 == 1 {
        VerClass::odd_line(p)
    } else {
        VerClass::unit(p)
    }
}

fn check_m(p: Prime, m: usize) -> Result<()> {
    if m < 2 || m + 2 > p.usize() {
        return Err(Error::OutOfRange(format!("need 2 ≤ m ≤ p−2, got m = {m} at p = {p}")));
    }
    Ok(())
}

/// Certificate that a graded algebra `A` is (r,s)-Koszul, read off an
/// explicit complex `P_• = A ⊗ P_•[•]`.
#[derive(Clone, Debug, Serialize)]
pub struct AlmostKoszulCertificate {
    pub algebra: String,
    pub r: usize,
    pub s: usize,
    /// Every `P_i[d]` is `A[d−i] ⊗ P_i[i]` on classes.
    pub generated_in_single_degree: bool,
    /// Homology is `1` at (0,0) and `A[r] ⊗ P_s[s]` at (s, r+s), nothing else.
    pub homology_as_required: bool,
    pub extra_class: VerClass,
    pub homology: Vec<HomologyEntry>,
}

impl AlmostKoszulCertificate {
    pub fn certified(&self) -> bool {
        self.generated_in_single_degree && self.homology_as_required
    }
}

/// Certificates for `SL_m` (via `K^•(L_m)`) and `ΛL_m` (via the De Rham
/// complex read with polynomial degree as homological degree; `L_m` is self-dual).
pub fn almost_koszul_certificates(p: Prime, m: usize) -> Result<(AlmostKoszulCertificate, AlmostKoszulCertificate)> {
    check_m(p, m)?;
    let n = p.usize();
    let table = power_table(p)?;
    let v = VerClass::simple(p, m)?;
    let mut model = BigradedModel::new(&v)?;
    let top = model.max_diagonal().expect("bounded");

    let r_sym = (0..n).filter(|&k| !table.sym(m, k).is_zero()).max().unwrap_or(0);
    let r_ext = (0..=m).filter(|&k| !table.ext(m, k).is_zero()).max().unwrap_or(0);
    let mut sym_gen = true;
    let mut ext_gen = true;
    let mut kh = HomologyTable::new(p);
    let mut dh = HomologyTable::new(p);
    for d in 0..=top {
        for i in 0..=d {
            let c = model.term(d - i, i)?.class();
            sym_gen &= c == table.sym(m, d - i).fuse(&table.ext(m, i));
            ext_gen &= c == table.ext(m, i).fuse(&table.sym(m, d - i));
        }
        for (i, c) in model.koszul_homology(d)? {
            kh.add(i, d, &c);
        }
        for (i, c) in model.de_rham_cohomology(d)? {
            dh.add(d - i, d, &c);
        }
    }
    let s_sym = (0..=top).filter(|&i| !table.ext(m, i).is_zero()).max().unwrap_or(0);
    let s_ext = (0..=top).filter(|&j| !table.sym(m, j).is_zero()).max().unwrap_or(0);

    let make = |name: String, r: usize, s: usize, gen: bool, h: &HomologyTable, extra: VerClass| {
        let mut expect = HomologyTable::new(p);
        expect.add(0, 0, &VerClass::unit(p));
        expect.add(s, r + s, &extra);
        AlmostKoszulCertificate {
            algebra: name,
            r,
            s,
            generated_in_single_degree: gen,
            homology_as_required: *h == expect,
            extra_class: extra,
            homology: h.records(),
        }
    };
    let sym_extra = table.sym(m, r_sym).fuse(&table.ext(m, s_sym));
    let ext_extra = table.ext(m, r_ext).fuse(&table.sym(m, s_ext));
    Ok((
        make(format!("S L{m}"), r_sym, s_sym, sym_gen, &kh, sym_extra),
        make(format!("Λ L{m}"), r_ext, s_ext, ext_gen, &dh, ext_extra),
    ))
}

/// The periodic Koszul complex of `L_m` on Ver-matrices.
///
/// Copy q occupies homological degrees `q(m+1) ..= q(m+1)+m` and is
/// `K^•(L_m)` shifted up by `qp` in diagonal degree and tensored with
/// `1_-^{⊗q(m+1)}`. Consecutive copies are joined by the identity of
/// `1_-^{⊗(q+1)(m+1)}` in diagonal degree `(q+1)p`.
pub struct PeriodicKoszul {
    p: Prime,
    m: usize,
    copies: usize,
    /// `base[d][i]`: class of `K^i(L_m)[d]`.
    base: Vec<Vec<VerClass>>,
    /// `diff[d][i]`: Ver-matrix `K^i[d] → K^{i−1}[d]` (i ≥ 1).
    diff: Vec<Vec<Option<VerMorphism>>>,
}

/// Outcome of [`PeriodicKoszul::check`].
#[derive(Clone, Debug, Serialize)]
pub struct PeriodicReport {
    pub m: usize,
    pub periods: usize,
    pub exact: bool,
    pub splices_are_identities: bool,
    pub generators_in_degree_qp: bool,
    pub nonzero_homology: Vec<HomologyEntry>,
}

impl PeriodicKoszul {
    /// Builds enough of the complex to test `periods` full periods.
    pub fn new(p: Prime, m: usize, periods: usize) -> Result<PeriodicKoszul> {
        check_m(p, m)?;
        if periods == 0 {
            return Err(Error::OutOfRange("at least one period required".into()));
        }
        let n = p.usize();
        let mut model = BigradedModel::new(&VerClass::simple(p, m)?)?;
        let mut base = Vec::new();
        let mut diff = Vec::new();
        for d in 0..=n {
            let mut cls = Vec::new();
            let mut ds = Vec::new();
            for i in 0..=m {
                if i > d {
                    cls.push(VerClass::zero(p));
                    ds.push(None);
                    continue;
                }
                cls.push(model.term(d - i, i)?.class());
                ds.push(if i > 0 { Some(model.koszul_ver(d - i, i)?) } else { None });
            }
            base.push(cls);
            diff.push(ds);
        }
        Ok(PeriodicKoszul {
            p,
            m,
            copies: periods + 1,
            base,
            diff,
        })
    }

    fn twisted(&self, q: usize) -> bool {
        q * (self.m + 1) % 2 == 1
    }

    /// Class of the term in homological degree `h`, diagonal degree `r`.
    pub fn term(&self, h: usize, r: usize) -> VerClass {
        let (q, i) = (h / (self.m + 1), h % (self.m + 1));
        let n = self.p.usize();
        if q >= self.copies || r < q * n || r - q * n > n {
            return VerClass::zero(self.p);
        }
        let c = self.base[r - q * n][i].clone();
        if self.twisted(q) {
            c.twist_odd()
        } else {
            c
        }
    }

    /// The differential out of `(h, r)` as a Ver-matrix.
    pub fn differential(&self, h: usize, r: usize) -> VerMorphism {
        let src = self.term(h, r);
        if h == 0 {
            return VerMorphism::zero(&src, &VerClass::zero(self.p));
        }
        let dst = self.term(h - 1, r);
        let (q, i) = (h / (self.m + 1), h % (self.m + 1));
        let n = self.p.usize();
        if q >= self.copies || r < q * n {
            return VerMorphism::zero(&src, &dst);
        }
        if i == 0 {
            return if r == q * n {
                VerMorphism::identity(&src)
            } else {
                VerMorphism::zero(&src, &dst)
            };
        }
        let d = r - q * n;
        match self.diff.get(d).and_then(|row| row[i].as_ref()) {
            Some(f) if self.twisted(q) => f.twist_odd(),
            Some(f) => f.clone(),
            None => VerMorphism::zero(&src, &dst),
        }
    }

    pub fn periods(&self) -> usize {
        self.copies - 1
    }

    /// Homology in all degrees below the top of the last tested period.
    pub fn check(&self) -> PeriodicReport {
        let p = self.p;
        let n = p.usize();
        let m = self.m;
        let periods = self.periods();
        let hmax = periods * (m + 1);
        let mut splices = true;
        let mut gens = true;
        for q in 1..self.copies {
            let h = q * (m + 1);
            let src = self.term(h, q * n);
            let dst = self.term(h - 1, q * n);
            let line = odd_power(p, q * (m + 1));
            splices &= src == line && dst == line;
            gens &= (0..q * n).all(|r| self.term(h, r).is_zero());
        }
        let mut table = HomologyTable::new(p);
        for h in 0..hmax {
            for r in 0..=periods * n {
                let out = self.differential(h, r);
                let inc = self.differential(h + 1, r);
                let c = &out.kernel_class() - &inc.image_class();
                table.add(h, r, &c);
            }
        }
        let mut expect = HomologyTable::new(p);
        expect.add(0, 0, &VerClass::unit(p));
        PeriodicReport {
            m,
            periods,
            exact: table == expect,
            splices_are_identities: splices,
            generators_in_degree_qp: gens,
            nonzero_homology: table.records(),
        }
    }
}

/// One generator of the periodic resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YonedaGenerator {
    pub degree: usize,
    pub diagonal: usize,
    pub class: VerClass,
}

/// Generators of the periodic resolution of `1` over `SL_m`, read off the
/// complex, together with whether they match the additive pattern
/// `Λ^i L_m ⊗ (1_-)^{⊗q}` (m even) or `Λ^i L_m` (m odd) at `(q(m+1)+i, qp+i)`.
pub fn yoneda_pattern(p: Prime, m: usize, periods: usize) -> Result<(Vec<YonedaGenerator>, bool)> {
    let pk = PeriodicKoszul::new(p, m, periods)?;
    let table = power_table(p)?;
    let n = p.usize();
    let mut out = Vec::new();
    let mut agree = true;
    for q in 0..periods {
        for i in 0..=m {
            let h = q * (m + 1) + i;
            let r = q * n + i;
            let class = pk.term(h, r);
            // nothing below the generating degree
            agree &= (0..r).all(|s| pk.term(h, s).is_zero());
            let predicted = if m.is_multiple_of(2) {
                table.ext(m, i).fuse(&odd_power(p, q))
            } else {
                table.ext(m, i)
            };
            agree &= class == predicted;
            out.push(YonedaGenerator {
                degree: h,
                diagonal: r,
                class,
            });
        }
    }
    Ok((out, agree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn cls(p: Prime, mults: &[i64]) -> VerClass {
        VerClass::from_mults(p, mults.to_vec()).unwrap()
    }

    #[test]
    fn koszul_l2_and_l3() {
        let p = p5();
        let h = koszul_homology(&VerClass::simple(p, 2).unwrap(), 6).unwrap();
        let mut e = HomologyTable::new(p);
        e.add(0, 0, &VerClass::unit(p));
        e.add(2, 5, &VerClass::odd_line(p));
        assert_eq!(h, e);
        let h = koszul_homology(&VerClass::simple(p, 3).unwrap(), 6).unwrap();
        let mut e = HomologyTable::new(p);
        e.add(0, 0, &VerClass::unit(p));
        e.add(3, 5, &VerClass::unit(p));
        assert_eq!(h, e);
    }

    #[test]
    fn single_term_in_degree_p() {
        let p = p5();
        let mut k = BigradedModel::new(&VerClass::simple(p, 2).unwrap()).unwrap();
        let t = k.term_classes(5).unwrap();
        for (i, c) in t.iter().enumerate() {
            assert_eq!(c.is_zero(), i != 2, "i = {i}: {c}");
        }
    }

    #[test]
    fn kunneth_sum() {
        let p = p5();
        let v = cls(p, &[0, 1, 1, 0]);
        let h = koszul_homology(&v, 10).unwrap();
        assert_eq!(h, kunneth_prediction(&v).unwrap());
        assert_eq!(h.get(2, 5), VerClass::odd_line(p));
        assert_eq!(h.get(3, 5), VerClass::unit(p));
        assert_eq!(h.get(5, 10), VerClass::odd_line(p));
    }

    #[test]
    fn classical_space_exact() {
        let p = p5();
        let h = koszul_homology(&cls(p, &[2, 0, 0, 0]), 4).unwrap();
        assert_eq!(h.entries().len(), 1);
        assert_eq!(h.get(0, 0), VerClass::unit(p));
    }

    #[test]
    fn squares_and_cartan() {
        let p = p5();
        for v in [cls(p, &[0, 1, 0, 0]), cls(p, &[0, 0, 1, 0]), cls(p, &[1, 1, 0, 0])] {
            let mut k = BigradedModel::new(&v).unwrap();
            let mut u = BigradedModel::untruncated(&v).unwrap();
            for d in 0..=6 {
                assert!(k.squares_vanish(d).unwrap());
                assert!(k.cartan_holds(d).unwrap(), "{v} d = {d}");
                assert!(k.differentials_equivariant(d).unwrap());
            }
            for d in 0..5 {
                assert!(u.cartan_holds(d).unwrap());
                assert!(u.squares_vanish(d).unwrap());
            }
        }
    }

    #[test]
    fn de_rham_lm() {
        let p = p5();
        for m in [2, 3] {
            let h = de_rham_cohomology(&VerClass::simple(p, m).unwrap(), 6).unwrap();
            let mut e = HomologyTable::new(p);
            e.add(0, 0, &VerClass::unit(p));
            e.add(m, 5, &odd_power(p, m + 1));
            assert_eq!(h, e);
        }
    }

    #[test]
    fn cartier_window() {
        let p = p5();
        let h = de_rham_cohomology(&VerClass::unit(p), 9).unwrap();
        let mut e = HomologyTable::new(p);
        e.add(0, 0, &VerClass::unit(p));
        e.add(0, 5, &VerClass::unit(p));
        e.add(1, 5, &VerClass::unit(p));
        assert_eq!(h, e);
    }

    #[test]
    fn certificates() {
        let p = p5();
        let (s, e) = almost_koszul_certificates(p, 2).unwrap();
        assert!(s.certified() && e.certified());
        assert_eq!((s.r, s.s), (3, 2));
        assert_eq!((e.r, e.s), (2, 3));
        let (s, e) = almost_koszul_certificates(p, 3).unwrap();
        assert!(s.certified() && e.certified());
        assert_eq!((s.r, s.s), (2, 3));
        assert_eq!((e.r, e.s), (3, 2));
    }

    #[test]
    fn periodic_exact() {
        let p = p5();
        for m in [2, 3] {
            let r = PeriodicKoszul::new(p, m, 2).unwrap().check();
            assert!(r.exact, "{r:?}");
            assert!(r.splices_are_identities && r.generators_in_degree_qp);
        }
    }

    #[test]
    fn yoneda_m2() {
        let p = p5();
        let (g, ok) = yoneda_pattern(p, 2, 2).unwrap();
        assert!(ok);
        let got: Vec<(usize, usize, VerClass)> = g.into_iter().map(|y| (y.degree, y.diagonal, y.class)).collect();
        let l = |m| VerClass::simple(p, m).unwrap();
        assert_eq!(
            got,
            vec![
                (0, 0, l(1)),
                (1, 1, l(2)),
                (2, 2, l(1)),
                (3, 5, l(4)),
                (4, 6, l(3)),
                (5, 7, l(4)),
            ]
        );
    }

    #[test]
    fn odd_line_rejected() {
        assert!(BigradedModel::new(&VerClass::odd_line(p5())).is_err());
    }

    #[test]
    fn determinant_small() {
        let p = p5();
        let a = FpMatrix::from_rows(p, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(determinant(&a), p.reduce(-2));
    }
}
