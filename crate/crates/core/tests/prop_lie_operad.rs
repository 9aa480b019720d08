use proptest::prelude::*;
use verp::lie_operad::{expand_to_words, expansion_matrix, lie_basis, sn_action, to_basis, tree_to_basis, BracketTree, LieElement};
use verp::sym_group::{all_perms, dynkin_theta, factorial, GroupAlgElem, Perm};
use verp::{FpMatrix, Prime};

/// A random full binary tree over the letters `1..=n` in a random order.
fn tree() -> impl Strategy<Value = BracketTree> {
    (2usize..=6)
        .prop_flat_map(|n| (Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<u8>(), n)))
        .prop_map(|(letters, splits)| build(&letters, &splits))
}

fn build(letters: &[usize], splits: &[u8]) -> BracketTree {
    if letters.len() == 1 {
        return BracketTree::leaf(letters[0]);
    }
    let k = 1 + splits[0] as usize % (letters.len() - 1);
    BracketTree::bracket(build(&letters[..k], &splits[1..]), build(&letters[k..], &splits[1..]))
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn basis_round_trip(t in tree()) {
        let words = expand_to_words(&t).unwrap();
        let ell = tree_to_basis(&t).unwrap();
        prop_assert_eq!(ell.expand(), words.clone());
        prop_assert_eq!(to_basis(&words).unwrap(), ell);
    }

    #[test]
    fn relabelling_matches_words(s in perm(5), coords in prop::collection::vec(-2i64..3, 24)) {
        let ell = LieElement::from_vector(5, &coords);
        let m = sn_action(5, &s);
        let moved = to_basis(&GroupAlgElem::from_perm(s, 1).mul(&ell.expand())).unwrap();
        let v = ell.to_vector();
        let mv: Vec<i64> = (0..24).map(|i| (0..24).map(|j| m.get(i, j) * v[j]).sum()).collect();
        prop_assert_eq!(moved.to_vector(), mv);
    }

    #[test]
    fn action_is_multiplicative(s in perm(5), t in perm(5)) {
        prop_assert_eq!(sn_action(5, &s).mul(&sn_action(5, &t)), sn_action(5, &s.compose(&t)));
    }
}

#[test]
fn expansion_has_full_rank() {
    // rank over F_p for a large prime bounds the rational rank from below
    let p = Prime::new(13).unwrap();
    for n in 2..=6 {
        let m = expansion_matrix(n).to_fp(p);
        assert_eq!(m.rank(), factorial(n - 1), "n = {n}");
        assert_eq!(lie_basis(n).len(), factorial(n - 1));
    }
}

#[test]
fn lie_is_the_orbit_of_theta() {
    // mutual membership of span{σθ_n} and the expansion image, over F_13
    let p = Prime::new(13).unwrap();
    for n in 2..=5 {
        let image = expansion_matrix(n).to_fp(p);
        let theta = dynkin_theta(n);
        let cols: Vec<Vec<u32>> = all_perms(n)
            .into_iter()
            .map(|s| GroupAlgElem::from_perm(s, 1).mul(&theta).to_vector(p))
            .collect();
        let orbit = FpMatrix::from_columns(p, factorial(n), &cols);
        let both = FpMatrix::hstack(&[&image, &orbit]).unwrap();
        assert_eq!(orbit.rank(), image.rank());
        assert_eq!(both.rank(), image.rank());
    }
}

#[test]
fn coxeter_relations() {
    for n in 2..=5 {
        let s: Vec<_> = (0..n - 1).map(|i| sn_action(n, &Perm::adjacent(n, i))).collect();
        let id = sn_action(n, &Perm::identity(n));
        for i in 0..n - 1 {
            assert_eq!(s[i].mul(&s[i]), id);
            if i + 1 < n - 1 {
                let a = s[i].mul(&s[i + 1]);
                assert_eq!(a.mul(&a).mul(&a), id);
            }
            for j in i + 2..n - 1 {
                assert_eq!(s[i].mul(&s[j]), s[j].mul(&s[i]));
            }
        }
    }
}
