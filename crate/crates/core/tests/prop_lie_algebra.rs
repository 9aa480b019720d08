use std::sync::OnceLock;

use proptest::prelude::*;
use verp::lie_algebra::{GammaContext, GlAlgebra, PJacobi, TruncatedFree};
use verp::{Prime, VerClass};

fn p5() -> Prime {
    Prime::new(5).unwrap()
}

fn ctx() -> &'static GammaContext {
    static C: OnceLock<GammaContext> = OnceLock::new();
    C.get_or_init(|| GammaContext::new(p5()).unwrap())
}

fn free_l2() -> &'static TruncatedFree {
    static L: OnceLock<TruncatedFree> = OnceLock::new();
    L.get_or_init(|| TruncatedFree::new(&VerClass::simple(p5(), 2).unwrap(), 5).unwrap())
}

fn gl() -> &'static GlAlgebra {
    static G: OnceLock<GlAlgebra> = OnceLock::new();
    G.get_or_init(|| GlAlgebra::new(&VerClass::from_mults(p5(), vec![0, 1, 1, 0]).unwrap()).unwrap())
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| (x + y) % 5).collect()
}

fn scale(l: u32, a: &[u32]) -> Vec<u32> {
    a.iter().map(|x| l * x % 5).collect()
}

fn check_twisted_linear(alg: &dyn PJacobi, x: &[u32], y: &[u32], lam: u32) -> Result<(), TestCaseError> {
    let c = ctx();
    let gx = alg.gamma(c, x).unwrap();
    let gy = alg.gamma(c, y).unwrap();
    prop_assert_eq!(alg.gamma(c, &add(x, y)).unwrap(), add(&gx, &gy));
    let l5 = lam.pow(5) % 5;
    prop_assert_eq!(alg.gamma(c, &scale(lam, x)).unwrap(), scale(l5, &gx));
    prop_assert!(alg.lift_independent(c, x).unwrap());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn gamma_on_free_is_twisted_linear(x in prop::collection::vec(0u32..5, 3), y in prop::collection::vec(0u32..5, 3), lam in 0u32..5) {
        check_twisted_linear(free_l2(), &x, &y, lam)?;
    }

    #[test]
    fn gamma_on_gl_is_twisted_linear_and_zero(x in prop::collection::vec(0u32..5, 2), y in prop::collection::vec(0u32..5, 2), lam in 0u32..5) {
        check_twisted_linear(gl(), &x, &y, lam)?;
        prop_assert_eq!(gl().target_dim(), 2);
        prop_assert!(gl().gamma(ctx(), &x).unwrap().iter().all(|&v| v == 0));
    }

    #[test]
    fn gl_of_small_objects_is_lie(m in prop::collection::vec(0i64..2, 4)) {
        prop_assume!(m.iter().any(|&c| c > 0));
        let lift_dim: i64 = m.iter().enumerate().map(|(i, &c)| (i as i64 + 1) * c).sum();
        if lift_dim > 4 {
            prop_assert!(GlAlgebra::new(&VerClass::from_mults(p5(), m).unwrap()).unwrap().identities_hold().is_err());
            return Ok(());
        }
        // only a simple X has End(X)'s unit block reduced to scalars
        let simple = m.iter().sum::<i64>() == 1;
        let g = GlAlgebra::new(&VerClass::from_mults(p5(), m).unwrap()).unwrap();
        prop_assert!(g.identities_hold().unwrap());
        prop_assert_eq!(g.unit_block_central().unwrap(), simple);
    }
}

#[test]
fn free_algebra_identities() {
    let l = free_l2();
    for a in 1..5 {
        for b in 1..=5 - a {
            assert!(l.antisymmetry_holds(a, b).unwrap(), "({a},{b})");
            for c in 1..=5usize.saturating_sub(a + b) {
                assert!(l.jacobi_holds(a, b, c).unwrap(), "({a},{b},{c})");
            }
        }
    }
}
