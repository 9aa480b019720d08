//! The multilinear part Lie_n of the Lie operad.
//!
//! Lie_n is the free abelian group of rank (n−1)! with basis `b_n∘σ`, σ
//! ranging over permutations fixing the letter 1, where `b_n` is the
//! left-normed bracket `[[…[1,2],3],…,n]`. Elements are embedded in Z S_n
//! by expanding brackets into words; `b_n∘σ` expands to `σ·θ_n`, whose only
//! word beginning with the letter 1 is `1 σ(2) … σ(n)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::matrix::FpMatrix;
use crate::sym_group::{all_perms, dynkin_theta, factorial, GroupAlgElem, Perm};

/// A bracket monomial with leaves labelled by distinct letters `1..n`.
#[derive(Clone, PartialEq, Eq)]
pub enum BracketTree {
    Leaf(usize),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl fmt::Debug for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(k) => write!(f, "{k}"),
            BracketTree::Node(a, b) => write!(f, "[{a:?},{b:?}]"),
        }
    }
}

impl BracketTree {
    pub fn leaf(k: usize) -> BracketTree {
        BracketTree::Leaf(k)
    }

    pub fn bracket(a: BracketTree, b: BracketTree) -> BracketTree {
        BracketTree::Node(Box::new(a), Box::new(b))
    }

    /// The left-normed bracket of the given letters.
    pub fn left_normed(letters: &[usize]) -> BracketTree {
        let mut t = BracketTree::Leaf(letters[0]);
        for &l in &letters[1..] {
            t = BracketTree::bracket(t, BracketTree::Leaf(l));
        }
        t
    }

    /// Parse text such as `[[1,2],3]` or `[1,[2,3]]`.
    pub fn parse(s: &str) -> Result<BracketTree> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        t.check_multilinear()?;
        Ok(t)
    }

    pub fn letters(&self) -> Vec<usize> {
        match self {
            BracketTree::Leaf(k) => vec![*k],
            BracketTree::Node(a, b) => {
                let mut v = a.letters();
                v.extend(b.letters());
                v
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.letters().len()
    }

    fn check_multilinear(&self) -> Result<()> {
        let mut l = self.letters();
        l.sort_unstable();
        if l.iter().enumerate().any(|(i, &k)| k != i + 1) {
            return Err(Error::Parse(format!(
                "bracket {self:?} is not multilinear in 1..{}",
                l.len()
            )));
        }
        Ok(())
    }

    fn expand_words(&self) -> BTreeMap<Vec<usize>, i64> {
        match self {
            BracketTree::Leaf(k) => BTreeMap::from([(vec![*k], 1)]),
            BracketTree::Node(a, b) => {
                let (ea, eb) = (a.expand_words(), b.expand_words());
                let mut out = BTreeMap::new();
                for (wa, &ca) in &ea {
                    for (wb, &cb) in &eb {
                        let mut ab = wa.clone();
                        ab.extend(wb);
                        *out.entry(ab).or_insert(0) += ca * cb;
                        let mut ba = wb.clone();
                        ba.extend(wa);
                        *out.entry(ba).or_insert(0) -= ca * cb;
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            }
        }
    }
}

fn parse_tree(c: &[char], pos: &mut usize) -> Result<BracketTree> {
    match c.get(*pos) {
        Some('[') => {
            *pos += 1;
            let a = parse_tree(c, pos)?;
            if c.get(*pos) != Some(&',') {
                return Err(Error::Parse("expected ',' in bracket".into()));
            }
            *pos += 1;
            let b = parse_tree(c, pos)?;
            if c.get(*pos) != Some(&']') {
                return Err(Error::Parse("expected ']'".into()));
            }
            *pos += 1;
            Ok(BracketTree::bracket(a, b))
        }
        Some(d) if d.is_ascii_digit() => {
            let start = *pos;
            while c.get(*pos).is_some_and(|d| d.is_ascii_digit()) {
                *pos += 1;
            }
            let s: String = c[start..*pos].iter().collect();
            Ok(BracketTree::Leaf(s.parse().map_err(|_| Error::Parse(s.clone()))?))
        }
        other => Err(Error::Parse(format!("unexpected {other:?} in bracket"))),
    }
}

/// Expansion of a multilinear bracket into Z S_n (`[x,y] ↦ xy − yx`).
pub fn expand_to_words(t: &BracketTree) -> Result<GroupAlgElem> {
    t.check_multilinear()?;
    let n = t.arity();
    let terms = t
        .expand_words()
        .into_iter()
        .map(|(w, c)| (Perm::from_word(&w).expect("multilinear"), c));
    Ok(GroupAlgElem::from_terms(n, terms))
}

/// An element of Lie_n in the basis `b_n∘σ`, σ fixing the letter 1.
#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    n: usize,
    coords: BTreeMap<Perm, i64>,
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|(s, c)| format!("{c}·b{}∘{}", self.n, s))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl LieElement {
    pub fn zero(n: usize) -> LieElement {
        LieElement {
            n,
            coords: BTreeMap::new(),
        }
    }

    /// The basis element `b_n∘σ`; σ must fix the first letter.
    pub fn basis(sigma: Perm) -> Result<LieElement> {
        if sigma.apply(0) != 0 {
            return Err(Error::OutOfRange(format!("{sigma} does not fix 1")));
        }
        let n = sigma.n();
        Ok(LieElement {
            n,
            coords: BTreeMap::from([(sigma, 1)]),
        })
    }

    /// `b_n` itself.
    pub fn b(n: usize) -> LieElement {
        LieElement::basis(Perm::identity(n)).expect("identity fixes 1")
    }

    pub fn from_coords(n: usize, coords: impl IntoIterator<Item = (Perm, i64)>) -> Result<LieElement> {
        let mut out = LieElement::zero(n);
        for (s, c) in coords {
            if s.n() != n || s.apply(0) != 0 {
                return Err(Error::OutOfRange(format!("{s} is not in the stabilizer of 1 in S_{n}")));
            }
            *out.coords.entry(s).or_insert(0) += c;
        }
        out.coords.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Perm, i64)> {
        self.coords.iter().map(|(s, &c)| (s, c))
    }

    pub fn coeff(&self, s: &Perm) -> i64 {
        self.coords.get(s).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coordinate vector of length (n−1)!, indexed by [`lie_basis`] order.
    pub fn to_vector(&self) -> Vec<i64> {
        let mut v = vec![0; factorial(self.n - 1)];
        for (s, &c) in &self.coords {
            v[s.rank()] = c;
        }
        v
    }

    pub fn from_vector(n: usize, v: &[i64]) -> LieElement {
        let basis = lie_basis(n);
        LieElement::from_coords(n, basis.into_iter().zip(v.iter().copied())).expect("basis perms")
    }

    pub fn add(&self, o: &LieElement) -> LieElement {
        assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (s, &c) in &o.coords {
            *out.coords.entry(s.clone()).or_insert(0) += c;
        }
        out.coords.retain(|_, c| *c != 0);
        out
    }

    pub fn scale(&self, k: i64) -> LieElement {
        let mut out = self.clone();
        out.coords.values_mut().for_each(|c| *c *= k);
        out.coords.retain(|_, c| *c != 0);
        out
    }

    /// Expansion `Σ c_σ σ·θ_n` in Z S_n.
    pub fn expand(&self) -> GroupAlgElem {
        let theta = dynkin_theta(self.n);
        let mut out = GroupAlgElem::zero(self.n);
        for (s, &c) in &self.coords {
            out = out.add(&GroupAlgElem::from_perm(s.clone(), c).mul(&theta));
        }
        out
    }
}

/// The permutations σ fixing the letter 1, in lexicographic order.
pub fn lie_basis(n: usize) -> Vec<Perm> {
    all_perms(n).into_iter().take(factorial(n - 1)).collect()
}

/// Coordinates of a word combination that lies in the image of Lie_n.
///
/// Each basis element `b_n∘σ` contributes exactly one word starting with 1,
/// namely σ itself, so the coefficients can be read off and the remainder
/// checked to vanish.
pub fn to_basis(x: &GroupAlgElem) -> Result<LieElement> {
    let n = x.n();
    let coords: Vec<(Perm, i64)> = x
        .terms()
        .filter(|(s, _)| s.apply(0) == 0)
        .map(|(s, c)| (s.clone(), c))
        .collect();
    let ell = LieElement::from_coords(n, coords)?;
    let rest = x.sub(&ell.expand());
    if !rest.is_zero() {
        return Err(Error::NotLieElement(format!(
            "{} words remain after elimination",
            rest.len()
        )));
    }
    Ok(ell)
}

pub fn tree_to_basis(t: &BracketTree) -> Result<LieElement> {
    to_basis(&expand_to_words(t)?)
}

/// An integer matrix stored row-major, used for Lie_n structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    for j in 0..o.cols {
                        out.data[i * o.cols + j] += a * o.get(k, j);
                    }
                }
            }
        }
        out
    }

    pub fn to_fp(&self, p: Prime) -> FpMatrix {
        FpMatrix::from_fn(p, self.rows, self.cols, |r, c| self.get(r, c))
    }
}

/// The action of σ on Lie_n by relabelling letters: `ℓ ↦ σ·expand(ℓ)`.
///
/// With `(στ)(k) = σ(τ(k))` this satisfies `M_σ M_τ = M_{στ}`. In operadic
/// notation, where `b∘σ` substitutes inputs, the same matrices realize the
/// right action by σ⁻¹.
pub fn sn_action(n: usize, sigma: &Perm) -> IntMatrix {
    let basis = lie_basis(n);
    let d = basis.len();
    let theta = dynkin_theta(n);
    let mut m = IntMatrix::zeros(d, d);
    for (j, tau) in basis.iter().enumerate() {
        let img = GroupAlgElem::from_perm(sigma.compose(tau), 1).mul(&theta);
        let ell = to_basis(&img).expect("S_n preserves Lie_n");
        for (s, c) in ell.coords() {
            m.data[s.rank() * d + j] = c;
        }
    }
    m
}

/// Shift every letter of a word combination by `k`, embedding S_b into S_{a+b}.
fn shifted_words(x: &GroupAlgElem, shift: usize) -> Vec<(Vec<usize>, i64)> {
    x.terms()
        .map(|(s, c)| (s.word().into_iter().map(|w| w + shift).collect(), c))
        .collect()
}

/// The operadic bracket `b∘(ℓa ⊗ ℓb)` in Lie_{a+b}, with ℓb's letters shifted by `a`.
pub fn operad_bracket(la: &LieElement, lb: &LieElement) -> Result<LieElement> {
    let (a, b) = (la.arity(), lb.arity());
    if a + b > crate::sym_group::MAX_GROUP_DEGREE + 1 {
        return Err(Error::DegreeTooLarge(format!("bracket arity {}", a + b)));
    }
    let wa = shifted_words(&la.expand(), 0);
    let wb = shifted_words(&lb.expand(), a);
    let mut terms: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (x, cx) in &wa {
        for (y, cy) in &wb {
            let mut xy = x.clone();
            xy.extend(y);
            *terms.entry(xy).or_insert(0) += cx * cy;
            let mut yx = y.clone();
            yx.extend(x);
            *terms.entry(yx).or_insert(0) -= cx * cy;
        }
    }
    let elem = GroupAlgElem::from_terms(
        a + b,
        terms
            .into_iter()
            .map(|(w, c)| (Perm::from_word(&w).expect("multilinear"), c)),
    );
    to_basis(&elem)
}

/// Matrix of the expansion Lie_n → Z S_n (rows: words by rank, columns: basis).
pub fn expansion_matrix(n: usize) -> IntMatrix {
    let basis = lie_basis(n);
    let nf = factorial(n);
    let d = basis.len();
    let theta = dynkin_theta(n);
    let mut m = IntMatrix::zeros(nf, d);
    for (j, s) in basis.iter().enumerate() {
        for (w, c) in GroupAlgElem::from_perm(s.clone(), 1).mul(&theta).terms() {
            m.data[w.rank() * d + j] = c;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> Perm {
        Perm::from_word(v).unwrap()
    }

    #[test]
    fn expand_small() {
        let e = expand_to_words(&BracketTree::parse("[1,2]").unwrap()).unwrap();
        let expect = GroupAlgElem::one(2).sub(&GroupAlgElem::from_perm(w(&[2, 1]), 1));
        assert_eq!(e, expect);
        let e3 = expand_to_words(&BracketTree::parse("[[1,2],3]").unwrap()).unwrap();
        assert_eq!(e3.len(), 4);
        assert_eq!(e3, dynkin_theta(3));
    }

    #[test]
    fn basis_leading_word() {
        for n in 2..=5 {
            for s in lie_basis(n) {
                let e = LieElement::basis(s.clone()).unwrap().expand();
                let starts: Vec<_> = e.terms().filter(|(t, _)| t.apply(0) == 0).collect();
                assert_eq!(starts.len(), 1);
                assert_eq!(starts[0], (&s, 1));
                // b_n∘σ is the left-normed bracket of the letters of σ
                let t = BracketTree::left_normed(&s.word());
                assert_eq!(expand_to_words(&t).unwrap(), e);
            }
        }
    }

    #[test]
    fn to_basis_examples() {
        assert_eq!(tree_to_basis(&BracketTree::parse("[1,2]").unwrap()).unwrap(), LieElement::b(2));
        assert_eq!(
            tree_to_basis(&BracketTree::parse("[2,1]").unwrap()).unwrap(),
            LieElement::b(2).scale(-1)
        );
        let x = tree_to_basis(&BracketTree::parse("[1,[2,3]]").unwrap()).unwrap();
        let expect = LieElement::from_coords(3, [(Perm::identity(3), 1), (w(&[1, 3, 2]), -1)]).unwrap();
        assert_eq!(x, expect);
        // words outside Lie_n are rejected
        assert!(matches!(
            to_basis(&GroupAlgElem::one(2)),
            Err(Error::NotLieElement(_))
        ));
    }

    #[test]
    fn action_small() {
        let m = sn_action(2, &Perm::adjacent(2, 0));
        assert_eq!(m.data, vec![-1]);
        for n in 2..=4 {
            let perms = all_perms(n);
            for s in &perms {
                for t in &perms {
                    assert_eq!(sn_action(n, s).mul(&sn_action(n, t)), sn_action(n, &s.compose(t)));
                }
            }
        }
    }

    #[test]
    fn bracket_of_brackets() {
        let b2 = LieElement::b(2);
        let x = operad_bracket(&b2, &b2).unwrap();
        let direct = tree_to_basis(&BracketTree::parse("[[1,2],[3,4]]").unwrap()).unwrap();
        assert_eq!(x, direct);
        assert_eq!(x.expand(), expand_to_words(&BracketTree::parse("[[1,2],[3,4]]").unwrap()).unwrap());
    }

    #[test]
    fn expansion_rank() {
        for n in 2..=5 {
            let m = expansion_matrix(n);
            // unit-triangular on the rows of words starting with 1
            let d = factorial(n - 1);
            for i in 0..d {
                for j in 0..d {
                    assert_eq!(m.get(i, j), (i == j) as i64);
                }
            }
        }
    }
}
