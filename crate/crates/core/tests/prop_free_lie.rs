use proptest::prelude::*;
use verp::free_lie::{e_class, flie_class_direct, free_lie_report, frlie_class};
use verp::ring::flie_classes;
use verp::{Prime, VerClass};

fn p5() -> Prime {
    Prime::new(5).unwrap()
}

/// Objects of Ver_5 of lift dimension at most 4.
fn small_object() -> impl Strategy<Value = VerClass> {
    prop::collection::vec(0i64..3, 4)
        .prop_filter("nonzero, small", |m| {
            let d: i64 = m.iter().enumerate().map(|(i, c)| (i as i64 + 1) * c).sum();
            d > 0 && d <= 4
        })
        .prop_map(|m| VerClass::from_mults(p5(), m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kernels_vanish_in_degrees_prime_to_p(v in small_object(), n in 1usize..5) {
        prop_assert!(e_class(&v, n).unwrap().is_zero());
    }

    #[test]
    fn kernel_in_degree_p_counts_l2(v in small_object()) {
        let want = VerClass::odd_line(p5()).scale(v.get(2));
        prop_assert_eq!(e_class(&v, 5).unwrap(), want);
    }

    #[test]
    fn recursion_matches_direct(v in small_object(), n in 1usize..=5) {
        prop_assert_eq!(flie_classes(&v, n).unwrap()[n - 1].clone(), flie_class_direct(&v, n).unwrap());
    }

    #[test]
    fn invariants_and_coinvariants_have_equal_size(v in small_object(), n in 1usize..=4) {
        // L_m is self-dual, so V* = V
        let fo = free_lie_report(&v, n).unwrap().folie;
        prop_assert_eq!(fo.lift_dim(), frlie_class(&v, n).unwrap().lift_dim());
    }
}
