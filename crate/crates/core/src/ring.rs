//! The Grothendieck ring Gr(Ver_p): fusion, power tables, class-valued
//! power series and the Hilbert-series recursion for free Lie algebras.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{inconsistent, Error, Result};
use crate::fp::Prime;
use crate::rep::{ext_power_object, jordan_object, sym_power_object};
use crate::ss::{ver_class, VerClass};

/// `L_a ⊗ L_b = ⊕ L_c`, c = |a−b|+1, |a−b|+3, …, min(a+b−1, 2p−1−a−b).
pub fn fuse(p: Prime, a: usize, b: usize) -> Result<VerClass> {
    let n = p.usize();
    if a == 0 || b == 0 || a >= n || b >= n {
        return Err(Error::OutOfRange(format!("fuse(L{a}, L{b}) outside Ver_{p}")));
    }
    let mut out = VerClass::zero(p);
    let lo = a.abs_diff(b) + 1;
    let hi = (a + b - 1).min(2 * n - 1 - a - b);
    let mut c = lo;
    while c <= hi {
        out.set(c, out.get(c) + 1);
        c += 2;
    }
    Ok(out)
}

/// Bilinear extension of [`fuse`].
pub fn fuse_classes(x: &VerClass, y: &VerClass) -> VerClass {
    let p = x.prime();
    let mut out = VerClass::zero(p);
    for a in 1..p.usize() {
        let ca = x.get(a);
        if ca == 0 {
            continue;
        }
        for b in 1..p.usize() {
            let cb = y.get(b);
            if cb != 0 {
                out = &out + &fuse(p, a, b).expect("in range").scale(ca * cb);
            }
        }
    }
    out
}

/// `[V]^n` in the fusion ring (n = 0 gives the unit).
pub fn class_power(v: &VerClass, n: usize) -> VerClass {
    let mut out = VerClass::unit(v.prime());
    for _ in 0..n {
        out = fuse_classes(&out, v);
    }
    out
}

const CACHE_FORMAT: &str = "verp-power-table/1";

const SELF_CHECK_DIM: usize = 400;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Classes `[S^i L_m]` and `[Λ^j L_m]` for one prime.
///
/// Stored entries: `S[m][i]` for `0 ≤ i ≤ p−m` (classes vanish beyond), and
/// `E[m][j]` for `0 ≤ j ≤ m`. For m = 1 the symmetric powers are all L_1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerTable {
    format: String,
    p: Prime,
    entries: BTreeMap<String, Vec<i64>>,
}

fn key(kind: char, m: usize, i: usize) -> String {
    format!("{kind}[{m}][{i}]")
}

impl PowerTable {
    /// Compute every entry from explicit symmetric and exterior powers of J_m.
    pub fn compute(p: Prime) -> Result<PowerTable> {
        let n = p.usize();
        let mut entries = BTreeMap::new();
        for m in 1..n {
            let j = jordan_object(p, m)?;
            let top = if m == 1 { 1 } else { n - m };
            for i in 0..=top {
                let c = ver_class(&sym_power_object(&j, i)?);
                entries.insert(key('S', m, i), c.mults().to_vec());
            }
            // degrees between p−m and p must vanish; checked while the powers stay small
            for i in top + 1..n {
                if m > 1 && binomial(m + i - 1, i) <= SELF_CHECK_DIM && !ver_class(&sym_power_object(&j, i)?).is_zero() {
                    return Err(inconsistent(format!("S^{i} L_{m} is not negligible")));
                }
            }
            for jd in 0..=m {
                let c = ver_class(&ext_power_object(&j, jd)?);
                entries.insert(key('E', m, jd), c.mults().to_vec());
            }
        }
        let t = PowerTable {
            format: CACHE_FORMAT.into(),
            p,
            entries,
        };
        t.check_endpoints()?;
        Ok(t)
    }

    /// `S^{p−m} L_m = 1_-^{⊗(m+1)}` and `Λ^m L_m = 1`.
    fn check_endpoints(&self) -> Result<()> {
        let p = self.p;
        let n = p.usize();
        for m in 2..n {
            let odd = if (m + 1) % 2 == 1 {
                VerClass::odd_line(p)
            } else {
                VerClass::unit(p)
            };
            if self.sym(m, n - m) != odd {
                return Err(inconsistent(format!("S^{} L_{m} = {}", n - m, self.sym(m, n - m))));
            }
        }
        for m in 1..n {
            if self.ext(m, m) != VerClass::unit(p) {
                return Err(inconsistent(format!("Λ^{m} L_{m} = {}", self.ext(m, m))));
            }
        }
        Ok(())
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// `[S^i L_m]`.
    pub fn sym(&self, m: usize, i: usize) -> VerClass {
        let p = self.p;
        if m == 1 {
            return VerClass::unit(p);
        }
        match self.entries.get(&key('S', m, i)) {
            Some(v) => VerClass::from_mults(p, v.clone()).expect("table shape"),
            None => VerClass::zero(p),
        }
    }

    /// `[Λ^j L_m]`.
    pub fn ext(&self, m: usize, j: usize) -> VerClass {
        match self.entries.get(&key('E', m, j)) {
            Some(v) => VerClass::from_mults(self.p, v.clone()).expect("table shape"),
            None => VerClass::zero(self.p),
        }
    }

    /// Largest i with `[S^i L_m] ≠ 0`, or None when unbounded (m = 1).
    pub fn sym_top(&self, m: usize) -> Option<usize> {
        (m > 1).then(|| self.p.usize() - m)
    }

    fn valid(&self, p: Prime) -> bool {
        self.format == CACHE_FORMAT && self.p == p && self.check_endpoints().is_ok()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Read from `dir`, recomputing (and rewriting) on a miss or a corrupt file.
    pub fn load_or_compute(p: Prime, dir: &Path) -> Result<PowerTable> {
        let path = dir.join(format!("powers-p{p}.json"));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(t) = serde_json::from_str::<PowerTable>(&text) {
                if t.valid(p) {
                    return Ok(t);
                }
            }
        }
        let t = PowerTable::compute(p)?;
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".powers-p{p}.json.{}.tmp", std::process::id()));
        fs::write(&tmp, t.to_json()?)?;
        fs::rename(&tmp, &path)?;
        Ok(t)
    }
}

static CACHE_DIR: Mutex<Option<PathBuf>> = Mutex::new(None);
static TABLES: OnceLock<Mutex<HashMap<Prime, Arc<PowerTable>>>> = OnceLock::new();

/// Directory used by [`power_table`] to persist tables; `None` keeps them in memory only.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.lock().expect("cache dir lock") = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.lock().expect("cache dir lock").clone()
}

/// The power table for p, memoized for the life of the process.
pub fn power_table(p: Prime) -> Result<Arc<PowerTable>> {
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().expect("table lock").get(&p) {
        return Ok(t.clone());
    }
    let t = match cache_dir() {
        Some(dir) => PowerTable::load_or_compute(p, &dir)?,
        None => PowerTable::compute(p)?,
    };
    let t = Arc::new(t);
    tables.lock().expect("table lock").insert(p, t.clone());
    Ok(t)
}

/// A power series over Gr(Ver_p), truncated after degree `D`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassSeries {
    coeffs: Vec<VerClass>,
}

impl ClassSeries {
    pub fn zero(p: Prime, d: usize) -> ClassSeries {
        ClassSeries {
            coeffs: vec![VerClass::zero(p); d + 1],
        }
    }

    pub fn one(p: Prime, d: usize) -> ClassSeries {
        let mut s = ClassSeries::zero(p, d);
        s.coeffs[0] = VerClass::unit(p);
        s
    }

    pub fn from_coeffs(coeffs: Vec<VerClass>) -> ClassSeries {
        assert!(!coeffs.is_empty());
        ClassSeries { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn prime(&self) -> Prime {
        self.coeffs[0].prime()
    }

    pub fn coefficient(&self, k: usize) -> &VerClass {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[VerClass] {
        &self.coeffs
    }

    pub fn mul(&self, o: &ClassSeries) -> ClassSeries {
        let d = self.degree().min(o.degree());
        let p = self.prime();
        let mut out = ClassSeries::zero(p, d);
        for i in 0..=d {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=d - i {
                let prod = fuse_classes(&self.coeffs[i], &o.coeffs[j]);
                out.coeffs[i + j] = &out.coeffs[i + j] + &prod;
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `[L_1]`.
    pub fn inverse(&self) -> Result<ClassSeries> {
        let p = self.prime();
        if self.coeffs[0] != VerClass::unit(p) {
            return Err(Error::OutOfRange(format!(
                "constant term {} is not the unit",
                self.coeffs[0]
            )));
        }
        let d = self.degree();
        let mut inv = ClassSeries::zero(p, d);
        inv.coeffs[0] = VerClass::unit(p);
        for k in 1..=d {
            let mut acc = VerClass::zero(p);
            for i in 1..=k {
                acc = &acc + &fuse_classes(&self.coeffs[i], &inv.coeffs[k - i]);
            }
            inv.coeffs[k] = acc.scale(-1);
        }
        Ok(inv)
    }

    /// Substitute `t ↦ t^k`, keeping the truncation degree.
    pub fn substitute_power(&self, k: usize) -> ClassSeries {
        let p = self.prime();
        let d = self.degree();
        let mut out = ClassSeries::zero(p, d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k <= d {
                out.coeffs[i * k] = c.clone();
            }
        }
        out
    }

    /// `f(t^k)` truncated at degree `d`, which may exceed the degree of `f`.
    pub fn substitute_power_to(&self, k: usize, d: usize) -> ClassSeries {
        let mut out = ClassSeries::zero(self.prime(), d);
        for (i, c) in self.coeffs.iter().enumerate().take_while(|(i, _)| i * k <= d) {
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    fn pow(&self, mut e: u64) -> ClassSeries {
        let mut base = self.clone();
        let mut out = ClassSeries::one(self.prime(), self.degree());
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }
}

/// Hilbert series of `S X`: `∏_m (Σ_i [S^i L_m] t^i)^{c_m}` through degree `d`.
pub fn h_series(x: &VerClass, d: usize) -> Result<ClassSeries> {
    let p = x.prime();
    if !x.is_nonnegative() {
        return Err(Error::OutOfRange(format!("h_series of virtual class {x}")));
    }
    let table = power_table(p)?;
    let mut out = ClassSeries::one(p, d);
    for m in 1..p.usize() {
        let factor = ClassSeries::from_coeffs((0..=d).map(|i| table.sym(m, i)).collect());
        out = out.mul(&factor.pow(x.get(m) as u64));
    }
    Ok(out)
}

/// Classes `[FLie_n(V)]` for n = 1..=d from
/// `∏_n h([FLie_n], t^n) = Σ_d [V]^d t^d`, solved degree by degree.
pub fn flie_classes(v: &VerClass, d: usize) -> Result<Vec<VerClass>> {
    let p = v.prime();
    let mut out: Vec<VerClass> = Vec::with_capacity(d);
    let mut prod = ClassSeries::one(p, d);
    for n in 1..=d {
        let target = class_power(v, n);
        let f = &target - prod.coefficient(n);
        if !f.is_nonnegative() {
            return Err(inconsistent(format!("[FLie_{n}] = {f} has a negative multiplicity")));
        }
        prod = prod.mul(&h_series(&f, d / n)?.substitute_power_to(n, d));
        out.push(f);
    }
    Ok(out)
}

fn mobius(n: u64) -> i128 {
    let mut n = n;
    let mut k = 0;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            n /= q;
            if n.is_multiple_of(q) {
                return 0;
            }
            k += 1;
        }
        q += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Necklace count `(1/n) Σ_{d|n} μ(d) k^{n/d}`: the dimension of the degree-n
/// part of the free Lie algebra on k generators.
pub fn witt_oracle(k: u64, n: u64) -> Result<i128> {
    if n == 0 {
        return Err(Error::OutOfRange("witt_oracle needs n >= 1".into()));
    }
    let mut s: i128 = 0;
    for d in 1..=n {
        if n.is_multiple_of(d) {
            let pw = (k as i128)
                .checked_pow((n / d) as u32)
                .ok_or_else(|| Error::OutOfRange(format!("{k}^{} overflows", n / d)))?;
            s += mobius(d) * pw;
        }
    }
    Ok(s / n as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn l(m: usize) -> VerClass {
        VerClass::simple(p5(), m).unwrap()
    }

    #[test]
    fn fusion_examples() {
        assert_eq!(fuse(p5(), 2, 2).unwrap(), &l(1) + &l(3));
        for m in 1..5 {
            assert_eq!(fuse(p5(), 1, m).unwrap(), l(m));
        }
        assert_eq!(fuse(p5(), 4, 4).unwrap(), l(1));
    }

    #[test]
    fn table_examples() {
        let t = power_table(p5()).unwrap();
        assert_eq!(t.sym(2, 3), l(4));
        assert_eq!(t.sym(3, 2), l(1));
        assert_eq!(t.sym(2, 4), VerClass::zero(p5()));
        assert_eq!(t.sym(1, 17), l(1));
        for m in 1..5 {
            assert_eq!(t.ext(m, 0), l(1));
        }
    }

    #[test]
    fn series() {
        let h1 = h_series(&l(1), 6).unwrap();
        assert!(h1.coeffs().iter().all(|c| *c == l(1)));
        let h4 = h_series(&l(4), 6).unwrap();
        assert_eq!(h4.coefficient(1), &l(4));
        assert!(h4.coeffs()[2..].iter().all(|c| c.is_zero()));
        let h2 = h_series(&l(2), 6).unwrap();
        assert_eq!(&h2.coeffs()[..4], &[l(1), l(2), l(3), l(4)]);
        let inv = h2.inverse().unwrap();
        assert_eq!(h2.mul(&inv), ClassSeries::one(p5(), 6));
    }

    #[test]
    fn witt() {
        assert_eq!(witt_oracle(2, 2).unwrap(), 1);
        assert_eq!(witt_oracle(2, 3).unwrap(), 2);
        for n in 2..10 {
            assert_eq!(witt_oracle(1, n).unwrap(), 0);
        }
    }

    #[test]
    fn flie_recursion_examples() {
        let f = flie_classes(&l(2), 5).unwrap();
        assert_eq!(f, vec![l(2), l(1), l(2), l(3), l(2)]);
        let two = l(1).scale(2);
        let f = flie_classes(&two, 3).unwrap();
        assert_eq!(f.iter().map(|c| c.get(1)).collect::<Vec<_>>(), vec![2, 1, 2]);
        assert!(flie_classes(&VerClass::zero(p5()), 4).unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn cache_roundtrip() {
        let dir = std::env::temp_dir().join(format!("verp-cache-test-{}", std::process::id()));
        let t1 = PowerTable::load_or_compute(p5(), &dir).unwrap();
        let text1 = fs::read_to_string(dir.join("powers-p5.json")).unwrap();
        let t2 = PowerTable::load_or_compute(p5(), &dir).unwrap();
        assert_eq!(t1, t2);
        fs::write(dir.join("powers-p5.json"), "{ not json").unwrap();
        let t3 = PowerTable::load_or_compute(p5(), &dir).unwrap();
        assert_eq!(t1, t3);
        assert_eq!(fs::read_to_string(dir.join("powers-p5.json")).unwrap(), text1);
        let _ = fs::remove_dir_all(&dir);
    }
}
