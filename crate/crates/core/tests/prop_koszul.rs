use proptest::prelude::*;
use verp::koszul::{de_rham_cohomology, koszul_homology, BigradedModel, HomologyTable};
use verp::{Prime, VerClass};

fn p5() -> Prime {
    Prime::new(5).unwrap()
}

/// Objects of Ver_5 without odd-line summands, lift dimension at most 5.
fn small_object() -> impl Strategy<Value = VerClass> {
    (0i64..3, 0i64..3, 0i64..2)
        .prop_filter("nonzero, small", |(a, b, c)| a + b + c > 0 && a + 2 * b + 3 * c <= 5)
        .prop_map(|(a, b, c)| VerClass::from_mults(p5(), vec![a, b, c, 0]).unwrap())
}

fn unit_only() -> HomologyTable {
    let mut t = HomologyTable::new(p5());
    t.add(0, 0, &VerClass::unit(p5()));
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_below_p(v in small_object()) {
        prop_assert_eq!(koszul_homology(&v, 4).unwrap(), unit_only());
    }

    #[test]
    fn differentials_square_to_zero_and_cartan(v in small_object(), d in 0usize..8) {
        let mut k = BigradedModel::new(&v).unwrap();
        prop_assert!(k.squares_vanish(d).unwrap());
        prop_assert!(k.cartan_holds(d).unwrap());
        prop_assert!(k.differentials_equivariant(d).unwrap());
    }

    #[test]
    fn de_rham_in_degrees_divisible_by_p(v in small_object()) {
        let h = de_rham_cohomology(&v, 7).unwrap();
        for (_, d) in h.entries().keys() {
            prop_assert_eq!(d % 5, 0);
        }
    }

    #[test]
    fn kunneth(v in small_object(), w in small_object()) {
        let sum = &v + &w;
        prop_assume!(sum.lift_dim() <= 6);
        let h = koszul_homology(&sum, 7).unwrap();
        let split = koszul_homology(&v, 7).unwrap().tensor(&koszul_homology(&w, 7).unwrap()).restrict(7);
        prop_assert_eq!(h, split);
    }
}

#[test]
fn untruncated_model_cartan_below_p() {
    for mults in [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [2, 0, 0, 0]] {
        let v = VerClass::from_mults(p5(), mults.to_vec()).unwrap();
        let mut u = BigradedModel::untruncated(&v).unwrap();
        for d in 0..5 {
            assert!(u.squares_vanish(d).unwrap() && u.cartan_holds(d).unwrap(), "{v} d = {d}");
        }
        assert!(u.koszul_homology(5).is_err());
    }
}
