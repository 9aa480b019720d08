use proptest::prelude::*;
use verp::sym_group::{all_perms, dynkin_theta, rep_pp, rep_rp, GroupAlgElem, Perm};
use verp::Prime;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

fn elem(n: usize) -> impl Strategy<Value = GroupAlgElem> {
    prop::collection::vec((perm(n), -3i64..4), 0..6).prop_map(move |t| GroupAlgElem::from_terms(n, t))
}

fn triple() -> impl Strategy<Value = (GroupAlgElem, GroupAlgElem, GroupAlgElem)> {
    (2usize..=5).prop_flat_map(|n| (elem(n), elem(n), elem(n)))
}

proptest! {
    #[test]
    fn convolution_is_associative((x, y, z) in triple()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn antipode_reverses_products((x, y, _) in triple()) {
        prop_assert_eq!(x.mul(&y).antipode(), y.antipode().mul(&x.antipode()));
    }

    #[test]
    fn representations_are_multiplicative((x, y, _) in (5usize..=5).prop_flat_map(|n| (elem(n), elem(n), elem(n)))) {
        let p = Prime::new(5).unwrap();
        for r in [rep_pp(p), rep_rp(p)] {
            let lhs = r.apply_elem(&x.mul(&y));
            let rhs = r.apply_elem(&x).mul(&r.apply_elem(&y)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn composition_and_inverse(s in perm(6), t in perm(6)) {
        let st = s.compose(&t);
        for k in 0..6 {
            prop_assert_eq!(st.apply(k), s.apply(t.apply(k)));
        }
        prop_assert!(s.compose(&s.inverse()).is_identity());
        prop_assert_eq!(st.sign(), s.sign() * t.sign());
        prop_assert_eq!(Perm::from_word(&s.word()).unwrap(), s);
    }
}

#[test]
fn theta_quasi_idempotent_through_seven() {
    for n in 2..=7 {
        let t = dynkin_theta(n);
        assert_eq!(t.mul(&t), t.scale(n as i64), "n = {n}");
    }
}

#[test]
fn theta_five_kills_r5() {
    let p = Prime::new(5).unwrap();
    let m = rep_rp(p).apply_elem(&dynkin_theta(5));
    assert_eq!(m.shape(), (3, 3));
    assert!(m.is_zero());
}

#[test]
fn ranks_cover_the_group() {
    let mut r: Vec<usize> = all_perms(4).iter().map(|s| s.rank()).collect();
    r.sort_unstable();
    assert_eq!(r, (0..24).collect::<Vec<_>>());
}
