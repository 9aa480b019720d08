//! The acceptance suite: thirteen criteria, each a batch of exact checks.
//!
//! Criterion 13 repeats criteria 1, 6, 7 and 8 at p = 7 and only runs when
//! requested.

use std::fmt::Debug;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::fp::Prime;
use crate::free_lie::{flie_class_direct, free_lie_report, rp_multiplicity_lemmas};
use crate::koszul::{
    almost_koszul_certificates, de_rham_cohomology, koszul_homology, kunneth_prediction, odd_power, yoneda_pattern,
    BigradedModel, HomologyTable, PeriodicKoszul,
};
use crate::lie_algebra::{pbw_class_gap, GammaContext, GlAlgebra, PJacobi, TruncatedFree};
use crate::matrix::{tensor_perm, FpMatrix};
use crate::rep::{hom_basis, jordan_object, jordan_sum, RepObject};
use crate::ring::{flie_classes, fuse, witt_oracle};
use crate::ss::{decompose, ver_class, ver_matrix, VerClass};
use crate::sym_group::{dynkin_theta, dynkin_theta_dual, rep_pp, rep_rp, right_annihilator};

pub const DEFAULT_SEED: u64 = 0x5eed_2026;

/// Titles of the criteria, indexed from 1.
pub const TITLES: [&str; 13] = [
    "Koszul homology of L2 and L3 at p=5",
    "Koszul exactness below p",
    "Kunneth for L2+L3",
    "De Rham cohomology and the Cartan identity",
    "almost-Koszul certificates and the periodic complex",
    "Dynkin idempotent and annihilator facts",
    "R_p lemmas",
    "kernels E_n",
    "Hilbert recursion against direct FLie",
    "PBW class gap",
    "p-Jacobi dichotomy",
    "model-correctness gates",
    "stretch: criteria 1, 6, 7, 8 at p=7",
];

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub stretch: bool,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            seed: DEFAULT_SEED,
            stretch: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    /// Observed and expected values when they differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub skipped: bool,
    pub seconds: f64,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Outcome {
    /// `PASS`, `FAIL` or `SKIP`, followed by the criterion and its title.
    pub fn line(&self) -> String {
        let tag = if self.skipped {
            "SKIP"
        } else if self.passed {
            "PASS"
        } else {
            "FAIL"
        };
        format!("{tag} criterion {:>2}: {} ({:.2}s)", self.id, self.title, self.seconds)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn ok(&mut self, label: impl Into<String>, passed: bool) {
        self.0.push(Check {
            label: label.into(),
            passed,
            mismatch: None,
        });
    }

    fn eq<T: PartialEq + Debug>(&mut self, label: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        self.0.push(Check {
            label: label.into(),
            passed,
            mismatch: (!passed).then(|| format!("got {got:?}, expected {want:?}")),
        });
    }
}

fn prime(p: u32) -> Prime {
    Prime::new(p).expect("supported prime")
}

fn simple(p: Prime, m: usize) -> VerClass {
    VerClass::simple(p, m).expect("simple in range")
}

fn class(p: Prime, mults: &[i64]) -> VerClass {
    VerClass::from_mults(p, mults.to_vec()).expect("class shape")
}

fn table(p: Prime, entries: &[(usize, usize, VerClass)]) -> HomologyTable {
    let mut t = HomologyTable::new(p);
    for (i, d, c) in entries {
        t.add(*i, *d, c);
    }
    t
}

/// Runs one criterion; 13 is skipped unless `opts.stretch`.
pub fn run(id: usize, opts: &Options) -> Outcome {
    let title = TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown").to_string();
    if id == 13 && !opts.stretch {
        return Outcome {
            id,
            title,
            passed: false,
            skipped: true,
            seconds: 0.0,
            checks: Vec::new(),
            error: None,
        };
    }
    let start = Instant::now();
    let mut c = Checks::default();
    let res = match id {
        1 => koszul_simples(&mut c, prime(5), &[2, 3], Some(30.0)),
        2 => exact_below_p(&mut c),
        3 => kunneth(&mut c),
        4 => de_rham(&mut c),
        5 => almost_koszul(&mut c),
        6 => dynkin(&mut c, prime(5), opts.seed),
        7 => rp_lemmas(&mut c, prime(5)),
        8 => kernels(&mut c),
        9 => hilbert(&mut c),
        10 => pbw(&mut c),
        11 => p_jacobi(&mut c, opts.seed),
        12 => gates(&mut c, opts.seed),
        13 => stretch(&mut c, opts.seed),
        _ => {
            c.ok(format!("criterion {id} exists"), false);
            Ok(())
        }
    };
    let error = res.err().map(|e| e.to_string());
    let passed = error.is_none() && !c.0.is_empty() && c.0.iter().all(|k| k.passed);
    Outcome {
        id,
        title,
        passed,
        skipped: false,
        seconds: start.elapsed().as_secs_f64(),
        checks: c.0,
        error,
    }
}

pub fn run_all(opts: &Options) -> Vec<Outcome> {
    (1..=TITLES.len()).map(|i| run(i, opts)).collect()
}

/// `H(K(L_m)) = 1 at (0,0) and 1_-^{⊗(m+1)} at (m, p)`, through diagonal p + 3.
fn koszul_simples(c: &mut Checks, p: Prime, ms: &[usize], budget: Option<f64>) -> Result<()> {
    let start = Instant::now();
    let n = p.usize();
    for &m in ms {
        let h = koszul_homology(&simple(p, m), n + 3)?;
        let want = table(p, &[(0, 0, VerClass::unit(p)), (m, n, odd_power(p, m + 1))]);
        c.eq(format!("H(K(L{m})) at p={p}"), h, want);
    }
    if p.get() == 5 {
        c.eq("1_-^3 = L4", odd_power(p, 3), simple(p, 4));
        c.eq("1_-^4 = L1", odd_power(p, 4), simple(p, 1));
    }
    if let Some(limit) = budget {
        let secs = start.elapsed().as_secs_f64();
        c.ok(format!("runtime {secs:.2}s under {limit}s"), secs < limit);
    }
    Ok(())
}

fn exact_below_p(c: &mut Checks) -> Result<()> {
    let p = prime(5);
    for v in ["L2", "L3", "L2+L3", "2*L1"] {
        let v = crate::expr::ObjectExpr::parse(p, v)?.class();
        let h = koszul_homology(&v, 4)?;
        c.eq(format!("K({v}) exact in diagonals 1..4"), h, table(p, &[(0, 0, VerClass::unit(p))]));
    }
    Ok(())
}

fn kunneth(c: &mut Checks) -> Result<()> {
    let p = prime(5);
    let v = class(p, &[0, 1, 1, 0]);
    let h = koszul_homology(&v, 10)?;
    let product = koszul_homology(&simple(p, 2), 10)?.tensor(&koszul_homology(&simple(p, 3), 10)?);
    c.eq("H(K(L2+L3)) = H(K(L2)) ⊗ H(K(L3))", h.clone(), product.restrict(10));
    c.eq("H(K(L2+L3)) matches the summand formula", h.clone(), kunneth_prediction(&v)?.restrict(10));
    c.eq("class at (5,10)", h.get(5, 10), VerClass::odd_line(p));
    Ok(())
}

fn de_rham(c: &mut Checks) -> Result<()> {
    let p = prime(5);
    for v in [simple(p, 1), simple(p, 2), simple(p, 3), class(p, &[0, 1, 1, 0])] {
        let h = de_rham_cohomology(&v, 9)?;
        let stray: Vec<(usize, usize)> = h.entries().keys().filter(|(_, d)| d % 5 != 0).copied().collect();
        c.eq(format!("DR({v}) concentrated in diagonals 0 mod 5"), stray, Vec::new());
    }
    for m in [2, 3] {
        let h = de_rham_cohomology(&simple(p, m), 9)?;
        c.eq(format!("H^{m}(DR(L{m}))[5]"), h.get(m, 5), odd_power(p, m + 1));
    }
    for v in [simple(p, 2), simple(p, 3), class(p, &[0, 1, 1, 0]), class(p, &[2, 0, 0, 0])] {
        let mut k = BigradedModel::new(&v)?;
        let mut bad = Vec::new();
        for d in 0..=9 {
            if !(k.cartan_holds(d)? && k.squares_vanish(d)?) {
                bad.push(d);
            }
        }
        c.eq(format!("Cartan identity and squares for {v} (Ver)"), bad, Vec::new());
        let mut u = BigradedModel::untruncated(&v)?;
        let mut bad = Vec::new();
        for d in 0..p.usize() {
            if !(u.cartan_holds(d)? && u.squares_vanish(d)?) {
                bad.push(d);
            }
        }
        c.eq(format!("Cartan identity and squares for {v} (Rep, d < p)"), bad, Vec::new());
    }
    Ok(())
}

fn almost_koszul(c: &mut Checks) -> Result<()> {
    let p = prime(5);
    let (s2, e2) = almost_koszul_certificates(p, 2)?;
    c.eq("SL2 (r,s)", (s2.r, s2.s), (3, 2));
    c.ok("SL2 certified", s2.certified());
    c.ok("ΛL2 certified", e2.certified());
    let (s3, e3) = almost_koszul_certificates(p, 3)?;
    c.eq("SL3 (r,s)", (s3.r, s3.s), (2, 3));
    c.ok("SL3 certified", s3.certified());
    c.ok("ΛL3 certified", e3.certified());
    for m in [2, 3] {
        let r = PeriodicKoszul::new(p, m, 2)?.check();
        c.ok(format!("periodic complex for L{m} exact through 2 periods"), r.exact);
        c.ok(format!("periodic complex for L{m} splices"), r.splices_are_identities && r.generators_in_degree_qp);
        let (_, agree) = yoneda_pattern(p, m, 2)?;
        c.ok(format!("Yoneda pattern for L{m}"), agree);
    }
    Ok(())
}

/// Binomial coefficients mod p by Pascal's rule.
fn binomial_row(p: Prime, n: usize) -> Vec<u32> {
    let mut row = vec![1u32];
    for _ in 0..n {
        let mut next = vec![1u32; row.len() + 1];
        for i in 1..row.len() {
            next[i] = p.add(row[i - 1], row[i]);
        }
        row = next;
    }
    row
}

fn dynkin(c: &mut Checks, p: Prime, seed: u64) -> Result<()> {
    let n = p.usize();
    let top = if n > 5 { 7 } else { 6 };
    for k in 2..=top {
        let t = dynkin_theta(k);
        c.ok(format!("θ_{k}² = {k}θ_{k}"), t.mul(&t) == t.scale(k as i64));
    }
    if n == 5 {
        let ann = right_annihilator(&dynkin_theta_dual(3), prime(3))?;
        c.eq("dim Ann_r(θ_3^∨) over F_3", ann.len(), 4);
    }
    let on_rp = rep_rp(p).apply_elem(&dynkin_theta(n));
    c.ok(format!("θ_{n} vanishes on R_{n}"), on_rp.is_zero() && on_rp.rows() == n - 2);
    // θ_p x = (Σ (−1)^i C(p−1,i) x_{i+1}) (e_1 − e_2) on the permutation module
    let m = rep_pp(p).apply_elem(&dynkin_theta(n));
    let binom = binomial_row(p, n - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut good = true;
    for _ in 0..20 {
        let x: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p.get())).collect();
        let mut a = 0;
        for i in 0..n {
            let t = p.mul(binom[i], x[i]);
            a = if i % 2 == 0 { p.add(a, t) } else { p.sub(a, t) };
        }
        let mut want = vec![0; n];
        want[0] = a;
        want[1] = p.neg(a);
        good &= m.mul_vec(&x) == want;
    }
    c.ok(format!("θ_{n} formula on the permutation module"), good);
    let alt: Vec<u32> = (0..n).map(|i| if i % 2 == 0 { 1 } else { p.neg(1) }).collect();
    c.eq(format!("C({}, i) ≡ (−1)^i mod {n}", n - 1), binom, alt);
    Ok(())
}

fn rp_lemmas(c: &mut Checks, p: Prime) -> Result<()> {
    let n = p.usize();
    let r = rp_multiplicity_lemmas(p)?;
    c.eq(format!("dim (R_{n} ⊗ Lie_{n})_(S_{n})"), r.rp_lie_coinvariants, 1);
    c.eq(format!("L{}-multiplicity space of L2^{n} has dim", n - 1), r.odd_multiplicity, n - 2);
    c.ok(format!("that space is isomorphic to R_{n}"), r.isomorphic_to_rp);
    c.ok("every other multiplicity space is projective", r.others_projective);
    Ok(())
}

fn kernels(c: &mut Checks) -> Result<()> {
    let p = prime(5);
    let l2 = simple(p, 2);
    for n in 2..=4 {
        c.eq(format!("E_{n}(L2)"), free_lie_report(&l2, n)?.e, VerClass::zero(p));
    }
    c.eq("E_5(L2)", free_lie_report(&l2, 5)?.e, simple(p, 4));
    c.eq("E_5(L3)", free_lie_report(&simple(p, 3), 5)?.e, VerClass::zero(p));
    c.eq("E_5(L4)", free_lie_report(&simple(p, 4), 5)?.e, VerClass::zero(p));
    c.eq("E_5(L2+L3)", free_lie_report(&class(p, &[0, 1, 1, 0]), 5)?.e, simple(p, 4));
    c.eq("E_5(2L2)", free_lie_report(&class(p, &[0, 2, 0, 0]), 5)?.e, class(p, &[0, 0, 0, 2]));
    let p3 = prime(3);
    c.eq("E_3(L2) at p=3", free_lie_report(&simple(p3, 2), 3)?.e, simple(p3, 2));
    Ok(())
}

fn hilbert(c: &mut Checks) -> Result<()> {
    let p = prime(5);
    for v in [simple(p, 2), simple(p, 3), class(p, &[0, 1, 1, 0])] {
        let rec = flie_classes(&v, 5)?;
        for n in 1..=5 {
            c.eq(format!("FLie_{n}({v})"), rec[n - 1].clone(), flie_class_direct(&v, n)?);
        }
    }
    let v = class(p, &[2, 0, 0, 0]);
    let rec = flie_classes(&v, 8)?;
    for n in 1..=8 {
        let want = class(p, &[witt_oracle(2, n as u64)? as i64, 0, 0, 0]);
        c.eq(format!("FLie_{n}(2L1) Witt number"), rec[n - 1].clone(), want);
    }
    Ok(())
}

fn pbw(c: &mut Checks) -> Result<()> {
    let p = prime(5);
    for (v, gap5) in [(simple(p, 2), simple(p, 4)), (simple(p, 3), VerClass::zero(p))] {
        let l = TruncatedFree::new(&v, 5)?;
        let rows = pbw_class_gap(l.components(), &v, 5)?;
        for r in &rows[..4] {
            c.eq(format!("PBW gap for {v} at d={}", r.degree), r.difference.clone(), VerClass::zero(p));
        }
        c.eq(format!("PBW gap for {v} at d=5"), rows[4].difference.clone(), gap5.clone());
        c.eq(format!("PBW gap for {v} at d=5 equals E_5"), rows[4].difference.clone(), free_lie_report(&v, 5)?.e);
        if v == simple(p, 2) {
            c.eq("L4 multiplicity in S(L)[5]", rows[4].s_side.get(4), 4);
            c.eq("L4 multiplicity in U(L)[5]", rows[4].u_side.get(4), 3);
        }
    }
    Ok(())
}

fn random_vec(rng: &mut ChaCha8Rng, p: Prime, k: usize) -> Vec<u32> {
    (0..k).map(|_| rng.gen_range(0..p.get())).collect()
}

fn p_jacobi(c: &mut Checks, seed: u64) -> Result<()> {
    let p = prime(5);
    let ctx = GammaContext::new(p)?;
    let gl2 = GlAlgebra::new(&simple(p, 2))?;
    c.eq("[gl(L2)]", gl2.class(), class(p, &[1, 0, 1, 0]));
    c.ok("gl(L2) is a Lie algebra in Ver_5", gl2.identities_hold()?);
    c.eq("dim Hom(L2, gl(L2))", gl2.hom_l2_dim(), 0);
    let gl = GlAlgebra::new(&class(p, &[1, 1, 0, 0]))?;
    c.ok("gl(L1+L2) is a Lie algebra in Ver_5", gl.identities_hold()?);
    c.ok("γ_5 ≡ 0 on gl(L1+L2)", gl.gamma_matrix(&ctx)?.is_zero());
    let gl = GlAlgebra::new(&class(p, &[0, 1, 1, 0]))?;
    c.eq("Hom(L2, gl(L2+L3)) and Hom(L4, gl(L2+L3))", (gl.hom_l2_dim(), gl.target_dim()), (2, 2));
    c.ok("γ_5 ≡ 0 on gl(L2+L3)", gl.gamma_matrix(&ctx)?.is_zero());

    let l = TruncatedFree::new(&simple(p, 2), 5)?;
    let mut lie = true;
    for a in 1..5 {
        for b in 1..=5 - a {
            lie &= l.antisymmetry_holds(a, b)?;
            for d in 1..=5usize.saturating_sub(a + b) {
                lie &= l.jacobi_holds(a, b, d)?;
            }
        }
    }
    c.ok("truncated_free(L2,5) is a Lie algebra", lie);
    let g = l.gamma_matrix(&ctx)?;
    c.ok("γ_5 ≢ 0 on truncated_free(L2,5)", !g.is_zero());
    c.eq("kernel of γ_5 on Hom(L2, L)", (g.cols() - g.rank(), g.cols()), (2, 3));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut additive, mut twisted, mut lifts) = (true, true, true);
    for _ in 0..5 {
        let x = random_vec(&mut rng, p, 3);
        let y = random_vec(&mut rng, p, 3);
        let lam = rng.gen_range(1..p.get());
        let sum: Vec<u32> = x.iter().zip(&y).map(|(a, b)| p.add(*a, *b)).collect();
        let gx = l.gamma(&ctx, &x)?;
        let gy = l.gamma(&ctx, &y)?;
        additive &= l.gamma(&ctx, &sum)? == gx.iter().zip(&gy).map(|(a, b)| p.add(*a, *b)).collect::<Vec<_>>();
        let scaled: Vec<u32> = x.iter().map(|a| p.mul(lam, *a)).collect();
        let lp = p.pow(lam, p.get() as u64);
        twisted &= l.gamma(&ctx, &scaled)? == gx.iter().map(|a| p.mul(lp, *a)).collect::<Vec<_>>();
        lifts &= l.lift_independent(&ctx, &x)?;
    }
    c.ok("γ_5 is additive", additive);
    c.ok("γ_5(λx) = λ^5 γ_5(x)", twisted);
    c.ok("γ_5 is independent of the lift", lifts);
    Ok(())
}

fn random_object(rng: &mut ChaCha8Rng, p: Prime) -> Result<RepObject> {
    let k = rng.gen_range(1..=3);
    let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=p.usize())).collect();
    jordan_sum(p, &sizes)
}

fn random_hom(rng: &mut ChaCha8Rng, x: &RepObject, y: &RepObject) -> Result<FpMatrix> {
    let p = x.prime();
    let mut f = FpMatrix::zeros(p, y.dim(), x.dim());
    for b in hom_basis(x, y) {
        f = f.add(&b.scale(rng.gen_range(0..p.get())))?;
    }
    Ok(f)
}

fn gates(c: &mut Checks, seed: u64) -> Result<()> {
    for q in [5, 7] {
        let p = prime(q);
        let mut agree = true;
        for a in 1..p.usize() {
            for b in 1..p.usize() {
                let oracle = ver_class(&jordan_object(p, a)?.tensor(&jordan_object(p, b)?));
                agree &= fuse(p, a, b)? == oracle;
            }
        }
        c.ok(format!("fusion equals Jordan types at p={q}"), agree);
        let m = p.usize() - 1;
        let x = jordan_object(p, m)?.tensor(&jordan_object(p, m)?);
        let s = decompose(&x)?;
        let swap = ver_matrix(&tensor_perm(p, &[m, m], &[1, 0])?, &s, &s)?;
        c.eq(format!("swap on L{m}⊗L{m} at p={q}"), swap.block(1).data().to_vec(), vec![p.neg(1)]);
    }
    let p = prime(5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let trials = 120;
    for _ in 0..trials {
        let (x, y, z) = (random_object(&mut rng, p)?, random_object(&mut rng, p)?, random_object(&mut rng, p)?);
        let f = random_hom(&mut rng, &x, &y)?;
        let g = random_hom(&mut rng, &y, &z)?;
        let (sx, sy, sz) = (decompose(&x)?, decompose(&y)?, decompose(&z)?);
        let whole = ver_matrix(&g.mul(&f)?, &sx, &sz)?;
        let parts = ver_matrix(&g, &sy, &sz)?.compose(&ver_matrix(&f, &sx, &sy)?)?;
        if whole != parts {
            failures += 1;
        }
    }
    c.eq(format!("F(g∘f) = F(g)∘F(f) on {trials} random composites"), failures, 0);
    Ok(())
}

fn stretch(c: &mut Checks, seed: u64) -> Result<()> {
    let p = prime(7);
    koszul_simples(c, p, &[2, 3, 4, 5], None)?;
    dynkin(c, p, seed)?;
    rp_lemmas(c, p)?;
    let l2 = simple(p, 2);
    for n in 2..=6 {
        c.eq(format!("E_{n}(L2) at p=7"), free_lie_report(&l2, n)?.e, VerClass::zero(p));
    }
    c.eq("E_7(L2) at p=7", free_lie_report(&l2, 7)?.e, simple(p, 6));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_row() {
        assert_eq!(binomial_row(prime(7), 4), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn stretch_is_opt_in() {
        let o = run(13, &Options::default());
        assert!(o.skipped);
        assert!(o.line().starts_with("SKIP"));
    }
}
