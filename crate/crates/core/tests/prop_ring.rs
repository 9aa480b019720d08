use proptest::prelude::*;
use verp::ring::{class_power, flie_classes, fuse, fuse_classes, h_series, witt_oracle};
use verp::{Prime, VerClass};

fn class_at(p: Prime, max: i64) -> impl Strategy<Value = VerClass> {
    prop::collection::vec(0..=max, p.usize() - 1).prop_map(move |m| VerClass::from_mults(p, m).unwrap())
}

fn triple() -> impl Strategy<Value = (VerClass, VerClass, VerClass)> {
    prop::sample::select(vec![3u32, 5, 7])
        .prop_flat_map(|p| {
            let p = Prime::new(p).unwrap();
            (class_at(p, 2), class_at(p, 2), class_at(p, 2))
        })
}

proptest! {
    #[test]
    fn fusion_is_a_commutative_ring((a, b, c) in triple()) {
        let p = a.prime();
        prop_assert_eq!(fuse_classes(&a, &b), fuse_classes(&b, &a));
        prop_assert_eq!(fuse_classes(&fuse_classes(&a, &b), &c), fuse_classes(&a, &fuse_classes(&b, &c)));
        prop_assert_eq!(fuse_classes(&a, &VerClass::unit(p)), a.clone());
        prop_assert_eq!(fuse_classes(&a, &(&b + &c)), &fuse_classes(&a, &b) + &fuse_classes(&a, &c));
    }

    #[test]
    fn dimensions_multiply_mod_p((a, b, _) in triple()) {
        let p = a.prime().get() as i64;
        let d = fuse_classes(&a, &b).lift_dim();
        prop_assert_eq!(d.rem_euclid(p), (a.lift_dim() * b.lift_dim()).rem_euclid(p));
    }

    #[test]
    fn symmetric_algebra_of_a_sum((a, b, _) in triple()) {
        let ha = h_series(&a, 5).unwrap();
        let hb = h_series(&b, 5).unwrap();
        prop_assert_eq!(h_series(&(&a + &b), 5).unwrap(), ha.mul(&hb));
    }

    #[test]
    fn recursion_reproduces_tensor_powers((a, _, _) in triple()) {
        // ∏_n h([FLie_n], t^n) = Σ [V^{⊗d}] t^d
        let p = a.prime();
        let d = 5;
        let f = flie_classes(&a, d).unwrap();
        let mut prod = verp::ring::ClassSeries::one(p, d);
        for (k, c) in f.iter().enumerate() {
            prop_assert!(c.is_nonnegative());
            prod = prod.mul(&h_series(c, d / (k + 1)).unwrap().substitute_power_to(k + 1, d));
        }
        for k in 0..=d {
            prop_assert_eq!(prod.coefficient(k).clone(), class_power(&a, k));
        }
    }

    #[test]
    fn witt_numbers_for_classical_spaces(k in 1u64..4, n in 1usize..8) {
        let p = Prime::new(7).unwrap();
        let v = VerClass::from_mults(p, {
            let mut m = vec![0; 6];
            m[0] = k as i64;
            m
        }).unwrap();
        let f = flie_classes(&v, n).unwrap();
        prop_assert_eq!(f[n - 1].get(1) as i128, witt_oracle(k, n as u64).unwrap());
    }
}

#[test]
fn fusion_associative_exhaustive() {
    for q in [3u32, 5, 7] {
        let p = Prime::new(q).unwrap();
        for a in 1..q as usize {
            for b in 1..q as usize {
                for c in 1..q as usize {
                    let l = fuse_classes(&fuse(p, a, b).unwrap(), &VerClass::simple(p, c).unwrap());
                    let r = fuse_classes(&VerClass::simple(p, a).unwrap(), &fuse(p, b, c).unwrap());
                    assert_eq!(l, r);
                }
            }
        }
    }
}
