//! Permutations, the group algebra of S_n, Dynkin elements, annihilator
//! ideals and a few explicit S_n-representations.
//!
//! Composition is `(στ)(k) = σ(τ(k))`. A multilinear word `w_1 … w_n` in the
//! letters `1..n` is identified with the permutation `k ↦ w_k`, so left
//! multiplication by σ relabels letters.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::matrix::FpMatrix;

/// Largest degree for which group-algebra matrices are materialized.
pub const MAX_GROUP_DEGREE: usize = 7;

/// A permutation of `{0..n}`, stored by images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            img: (0..n as u8).collect(),
        }
    }

    /// From 0-based images; rejects non-bijections.
    pub fn from_images(img: &[usize]) -> Result<Perm> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &i in img {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("{img:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Perm {
            img: img.iter().map(|&i| i as u8).collect(),
        })
    }

    /// From a word in the letters `1..n` (one-line notation).
    pub fn from_word(word: &[usize]) -> Result<Perm> {
        if word.contains(&0) {
            return Err(Error::Parse("letters start at 1".into()));
        }
        Perm::from_images(&word.iter().map(|&w| w - 1).collect::<Vec<_>>())
    }

    /// The cycle `(c_1 c_2 … c_k)` in 1-based letters: `c_1 ↦ c_2 ↦ … ↦ c_k ↦ c_1`.
    pub fn cycle(n: usize, letters: &[usize]) -> Result<Perm> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for (k, &c) in letters.iter().enumerate() {
            if c == 0 || c > n || seen[c - 1] {
                return Err(Error::Parse(format!("bad cycle {letters:?} in S_{n}")));
            }
            seen[c - 1] = true;
            img[c - 1] = letters[(k + 1) % letters.len()] - 1;
        }
        Perm::from_images(&img)
    }

    /// The descending cycle `(k … 1)`, i.e. `k ↦ k-1 ↦ … ↦ 1 ↦ k`.
    pub fn descending_cycle(n: usize, k: usize) -> Perm {
        let letters: Vec<usize> = (1..=k).rev().collect();
        Perm::cycle(n, &letters).expect("k <= n")
    }

    /// The adjacent transposition swapping `i` and `i+1` (0-based).
    pub fn adjacent(n: usize, i: usize) -> Perm {
        let mut img: Vec<u8> = (0..n as u8).collect();
        img.swap(i, i + 1);
        Perm { img }
    }

    /// Parse a product of cycles such as `(321)(45)` or `(3 2 1)`.
    ///
    /// Cycles are composed right to left like any product.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Perm> {
        let mut out = Perm::identity(n);
        let mut rest = s.trim();
        if rest.is_empty() || rest == "id" || rest == "()" {
            return Ok(out);
        }
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let inner = &body[..close];
            let letters: Vec<usize> = if inner.contains([' ', ',']) {
                inner
                    .split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
                    .collect::<Result<_>>()?
            } else {
                inner
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            out = out.compose(&Perm::cycle(n, &letters)?);
            rest = body[close + 1..].trim_start();
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.img[k] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&i| i as usize).collect()
    }

    /// The word `σ(1) … σ(n)` with 1-based letters.
    pub fn word(&self) -> Vec<usize> {
        self.img.iter().map(|&i| i as usize + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            img: other.img.iter().map(|&k| self.img[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.n()];
        for (k, &s) in self.img.iter().enumerate() {
            img[s as usize] = k as u8;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(k, &s)| k == s as usize)
    }

    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// +1 or -1.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Adjacent transpositions `s_{i_1}, …, s_{i_k}` with `σ = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut sigma = self.clone();
        let mut rev = Vec::new();
        loop {
            let Some(i) = (0..sigma.n().saturating_sub(1)).find(|&i| sigma.img[i] > sigma.img[i + 1]) else {
                break;
            };
            rev.push(i);
            sigma.img.swap(i, i + 1);
        }
        rev.reverse();
        rev
    }

    /// Lexicographic rank among all permutations of the same degree.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut r = 0;
        for i in 0..n {
            let smaller = self.img[i + 1..].iter().filter(|&&x| x < self.img[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    /// Cycle notation with 1-based letters, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for s in 0..n {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            out.push('(');
            let mut k = s;
            let mut first = true;
            while !seen[k] {
                seen[k] = true;
                if !first && n > 9 {
                    out.push(' ');
                }
                out.push_str(&(k + 1).to_string());
                first = false;
                k = self.apply(k);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// All permutations of `{0..n}` in lexicographic order (so `all_perms(n)[σ.rank()] == σ`).
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm { img: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// An element of the group ring Z S_n, or of F_p S_n when a modulus is set.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgElem {
    n: usize,
    modulus: Option<Prime>,
    terms: BTreeMap<Perm, i64>,
}

impl fmt::Debug for GroupAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| format!("{c}·{}", s.word().iter().map(|w| w.to_string()).collect::<String>()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl GroupAlgElem {
    pub fn zero(n: usize) -> GroupAlgElem {
        GroupAlgElem {
            n,
            modulus: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> GroupAlgElem {
        GroupAlgElem::from_perm(Perm::identity(n), 1)
    }

    pub fn from_perm(sigma: Perm, c: i64) -> GroupAlgElem {
        let mut x = GroupAlgElem::zero(sigma.n());
        x.add_term(sigma, c);
        x
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Perm, i64)>) -> GroupAlgElem {
        let mut x = GroupAlgElem::zero(n);
        for (s, c) in terms {
            x.add_term(s, c);
        }
        x
    }

    /// Coefficients over F_p, indexed by lexicographic rank.
    pub fn from_vector(n: usize, p: Prime, v: &[u32]) -> GroupAlgElem {
        let perms = all_perms(n);
        let mut x = GroupAlgElem::zero(n).with_modulus(p);
        for (s, &c) in perms.into_iter().zip(v) {
            x.add_term(s, c as i64);
        }
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> Option<Prime> {
        self.modulus
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &Perm) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    fn normalize(&self, c: i64) -> i64 {
        match self.modulus {
            Some(p) => p.reduce(c) as i64,
            None => c,
        }
    }

    pub fn add_term(&mut self, s: Perm, c: i64) {
        assert_eq!(s.n(), self.n);
        let v = self.normalize(self.coeff(&s) + c);
        if v == 0 {
            self.terms.remove(&s);
        } else {
            self.terms.insert(s, v);
        }
    }

    /// Reduce coefficients into `0..p` and remember the modulus.
    pub fn with_modulus(&self, p: Prime) -> GroupAlgElem {
        let terms = self
            .terms
            .iter()
            .filter_map(|(s, &c)| {
                let r = p.reduce(c);
                (r != 0).then(|| (s.clone(), r as i64))
            })
            .collect();
        GroupAlgElem {
            n: self.n,
            modulus: Some(p),
            terms,
        }
    }

    fn combine(&self, o: &GroupAlgElem, sign: i64) -> GroupAlgElem {
        assert_eq!(self.n, o.n);
        let mut terms = self.terms.clone();
        for (s, &c) in &o.terms {
            *terms.entry(s.clone()).or_insert(0) += sign * c;
        }
        let modulus = self.modulus.or(o.modulus);
        let mut out = GroupAlgElem {
            n: self.n,
            modulus,
            terms,
        };
        out.clean();
        out
    }

    fn clean(&mut self) {
        if let Some(p) = self.modulus {
            for c in self.terms.values_mut() {
                *c = p.reduce(*c) as i64;
            }
        }
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn add(&self, o: &GroupAlgElem) -> GroupAlgElem {
        self.combine(o, 1)
    }

    pub fn sub(&self, o: &GroupAlgElem) -> GroupAlgElem {
        self.combine(o, -1)
    }

    pub fn scale(&self, c: i64) -> GroupAlgElem {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out.clean();
        out
    }

    /// Convolution product.
    pub fn mul(&self, o: &GroupAlgElem) -> GroupAlgElem {
        assert_eq!(self.n, o.n);
        let mut terms: BTreeMap<Perm, i64> = BTreeMap::new();
        for (s, &a) in &self.terms {
            for (t, &b) in &o.terms {
                *terms.entry(s.compose(t)).or_insert(0) += a * b;
            }
        }
        let mut out = GroupAlgElem {
            n: self.n,
            modulus: self.modulus.or(o.modulus),
            terms,
        };
        out.clean();
        out
    }

    /// The antipode `σ ↦ σ⁻¹`, extended linearly.
    pub fn antipode(&self) -> GroupAlgElem {
        GroupAlgElem {
            n: self.n,
            modulus: self.modulus,
            terms: self.terms.iter().map(|(s, &c)| (s.inverse(), c)).collect(),
        }
    }

    /// Coefficient vector over F_p, indexed by lexicographic rank.
    pub fn to_vector(&self, p: Prime) -> Vec<u32> {
        let mut v = vec![0; factorial(self.n)];
        for (s, &c) in &self.terms {
            v[s.rank()] = p.reduce(c);
        }
        v
    }

    /// Matrix of `z ↦ self · z` on F_p S_n in the lexicographic basis.
    pub fn left_mult_matrix(&self, p: Prime) -> Result<FpMatrix> {
        if self.n > MAX_GROUP_DEGREE {
            return Err(Error::DegreeTooLarge(format!(
                "group algebra of S_{} exceeds S_{MAX_GROUP_DEGREE}",
                self.n
            )));
        }
        let perms = all_perms(self.n);
        let nf = perms.len();
        let mut m = FpMatrix::zeros(p, nf, nf);
        for (j, t) in perms.iter().enumerate() {
            for (s, &c) in &self.terms {
                let r = s.compose(t).rank();
                let cur = m.get(r, j);
                m.set(r, j, p.add(cur, p.reduce(c)));
            }
        }
        Ok(m)
    }
}

/// `θ_n = (Id − (21))(Id − (321)) ⋯ (Id − (n…1))` over Z.
pub fn dynkin_theta(n: usize) -> GroupAlgElem {
    assert!(n >= 1);
    let mut theta = GroupAlgElem::one(n);
    for k in 2..=n {
        let factor = GroupAlgElem::one(n).sub(&GroupAlgElem::from_perm(Perm::descending_cycle(n, k), 1));
        theta = theta.mul(&factor);
    }
    theta
}

/// `θ_n^∨`, the antipode of θ_n.
pub fn dynkin_theta_dual(n: usize) -> GroupAlgElem {
    dynkin_theta(n).antipode()
}

/// An F_p-basis of `{x ∈ F_p S_n : y x = 0}`.
pub fn right_annihilator(y: &GroupAlgElem, p: Prime) -> Result<Vec<GroupAlgElem>> {
    let m = y.left_mult_matrix(p)?;
    let k = m.kernel_basis();
    Ok((0..k.cols())
        .map(|j| GroupAlgElem::from_vector(y.n(), p, &k.col(j)))
        .collect())
}

/// `(1/n!) Σ (±1)^σ σ` over F_p; requires `n < p`.
pub fn symmetrizer(n: usize, sign: bool, p: Prime) -> Result<GroupAlgElem> {
    if n >= p.usize() {
        return Err(Error::OutOfRange(format!(
            "symmetrizer of degree {n} needs n < p = {p}"
        )));
    }
    let inv = p.inv(p.reduce(factorial(n) as i64)) as i64;
    let terms = all_perms(n)
        .into_iter()
        .map(|s| {
            let c = if sign { s.sign() * inv } else { inv };
            (s, c)
        });
    Ok(GroupAlgElem::from_terms(n, terms).with_modulus(p))
}

/// A representation of S_n over F_p given by the images of the adjacent
/// transpositions `s_i = (i, i+1)`.
#[derive(Clone, Debug)]
pub struct SnRep {
    n: usize,
    dim: usize,
    p: Prime,
    gens: Vec<FpMatrix>,
}

impl SnRep {
    pub fn new(n: usize, p: Prime, gens: Vec<FpMatrix>) -> Result<SnRep> {
        if gens.len() != n.saturating_sub(1) {
            return Err(Error::ShapeMismatch(format!(
                "S_{n} needs {} generators, got {}",
                n.saturating_sub(1),
                gens.len()
            )));
        }
        let dim = gens.first().map_or(0, |g| g.rows());
        Ok(SnRep { n, dim, p, gens })
    }

    /// A representation from an explicit action `σ ↦ matrix`.
    pub fn from_action(n: usize, p: Prime, action: impl Fn(&Perm) -> FpMatrix) -> Result<SnRep> {
        let gens = (0..n.saturating_sub(1)).map(|i| action(&Perm::adjacent(n, i))).collect();
        SnRep::new(n, p, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn prime(&self) -> Prime {
        self.p
    }
    pub fn generators(&self) -> &[FpMatrix] {
        &self.gens
    }

    pub fn matrix_of(&self, sigma: &Perm) -> FpMatrix {
        let mut m = FpMatrix::identity(self.p, self.dim);
        for i in sigma.reduced_word() {
            m = m.mul(&self.gens[i]).expect("square");
        }
        m
    }

    /// Matrices of every group element, keyed by permutation.
    pub fn all_matrices(&self) -> HashMap<Perm, FpMatrix> {
        let mut out = HashMap::new();
        let id = Perm::identity(self.n);
        out.insert(id.clone(), FpMatrix::identity(self.p, self.dim));
        let mut frontier = vec![id];
        while let Some(s) = frontier.pop() {
            let ms = out[&s].clone();
            for (i, g) in self.gens.iter().enumerate() {
                let t = s.compose(&Perm::adjacent(self.n, i));
                if !out.contains_key(&t) {
                    out.insert(t.clone(), ms.mul(g).expect("square"));
                    frontier.push(t);
                }
            }
        }
        out
    }

    /// `ρ(x) = Σ x_σ ρ(σ)`.
    pub fn apply_elem(&self, x: &GroupAlgElem) -> FpMatrix {
        assert_eq!(x.n(), self.n);
        let mut out = FpMatrix::zeros(self.p, self.dim, self.dim);
        for (s, c) in x.terms() {
            out.add_scaled(self.p.reduce(c), &self.matrix_of(s)).expect("same shape");
        }
        out
    }

    /// Checks `s_i² = 1`, `(s_i s_{i+1})³ = 1` and `(s_i s_j)² = 1` for `|i−j| ≥ 2`.
    pub fn satisfies_coxeter_relations(&self) -> bool {
        let id = FpMatrix::identity(self.p, self.dim);
        let g = &self.gens;
        for i in 0..g.len() {
            if g[i].mul(&g[i]).unwrap() != id {
                return false;
            }
            for j in i + 1..g.len() {
                let e = if j == i + 1 { 3 } else { 2 };
                if g[i].mul(&g[j]).unwrap().pow(e) != id {
                    return false;
                }
            }
        }
        true
    }
}

/// The permutation representation P_p of S_p on F_p^p: `σ e_i = e_{σ(i)}`.
pub fn rep_pp(p: Prime) -> SnRep {
    let n = p.usize();
    SnRep::from_action(n, p, |s| permutation_matrix(p, s)).expect("generator count")
}

pub fn permutation_matrix(p: Prime, s: &Perm) -> FpMatrix {
    let n = s.n();
    let mut m = FpMatrix::zeros(p, n, n);
    for i in 0..n {
        m.set(s.apply(i), i, 1);
    }
    m
}

/// Coordinates in R_p of a zero-sum vector of length p, w.r.t. the basis
/// `b_i = e_i − e_{i+1}` (i = 1..p−2) of zero-sum functions modulo constants.
pub fn rp_coordinates(p: Prime, x: &[u32]) -> Vec<u32> {
    let n = p.usize();
    debug_assert_eq!(x.len(), n);
    // partial sums give coordinates against b_1..b_{p-1}; the constant vector
    // has coordinates (1, 2, …, p−1), so clear the last one with it
    let mut c = Vec::with_capacity(n - 1);
    let mut s = 0;
    for &xi in &x[..n - 1] {
        s = p.add(s, xi);
        c.push(s);
    }
    let last = c[n - 2];
    // subtract (last / (p-1)) · (1..p-1) = -last · (1..p-1)
    (0..n - 2)
        .map(|i| p.add(c[i], p.mul(last, (i + 1) as u32)))
        .collect()
}

/// R_p: zero-sum functions on `[1, p]` modulo constants, of dimension p − 2.
pub fn rep_rp(p: Prime) -> SnRep {
    let n = p.usize();
    SnRep::from_action(n, p, |s| {
        let mut m = FpMatrix::zeros(p, n - 2, n - 2);
        for j in 0..n - 2 {
            let mut v = vec![0u32; n];
            v[s.apply(j)] = 1;
            v[s.apply(j + 1)] = p.neg(1);
            for (i, c) in rp_coordinates(p, &v).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    })
    .expect("generator count")
}

/// The sign character of S_n.
pub fn rep_sign(n: usize, p: Prime) -> SnRep {
    SnRep::from_action(n, p, |s| FpMatrix::from_fn(p, 1, 1, |_, _| s.sign())).expect("generator count")
}

/// The trivial character of S_n.
pub fn rep_trivial(n: usize, p: Prime) -> SnRep {
    SnRep::from_action(n, p, |_| FpMatrix::identity(p, 1)).expect("generator count")
}

/// Whether a unipotent operator `u` with `(u−1)^p = 0` makes its space a free
/// F_p[Z/p]-module, i.e. its Jordan type consists of size-p blocks only.
pub fn is_projective_over_cyclic(u: &FpMatrix, p: Prime) -> bool {
    let n = u.rows();
    let nil = u.sub(&FpMatrix::identity(p, n)).expect("square");
    if !nil.pow(p.get()).is_zero() {
        return false;
    }
    let blocks = n - nil.rank();
    blocks * p.usize() == n
}

/// Value of `a = Σ_{i=0}^{p−1} (−1)^i C(p−1, i) x_{i+1}` over F_p.
pub fn alternating_binomial_sum(p: Prime, x: &[u32]) -> u32 {
    let n = p.usize();
    let mut a = 0;
    let mut binom: u64 = 1;
    for i in 0..n {
        let term = p.mul(p.reduce(binom as i64), x[i]);
        a = if i % 2 == 0 { p.add(a, term) } else { p.sub(a, term) };
        binom = binom * (n - 1 - i) as u64 / (i + 1) as u64;
    }
    a
}
