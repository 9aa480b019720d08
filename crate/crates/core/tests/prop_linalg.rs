use proptest::prelude::*;
use verp::matrix::{tensor_perm, FpMatrix};
use verp::sym_group::Perm;
use verp::Prime;

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![3u32, 5, 7, 11]).prop_map(|p| Prime::new(p).unwrap())
}

fn matrix() -> impl Strategy<Value = FpMatrix> {
    (prime(), 1usize..7, 1usize..7).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p.get() as i64, r * c)
            .prop_map(move |v| FpMatrix::from_fn(p, r, c, |i, j| v[i * c + j]))
    })
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let (r, piv) = m.rref();
        let (rr, piv2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn kernel_is_annihilated(m in matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(k.cols() + m.rank(), m.cols());
        if k.cols() > 0 {
            prop_assert!(m.mul(&k).unwrap().is_zero());
        }
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rank_of_transpose(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn tensor_perm_is_a_homomorphism(
        (dims, s, t) in (1usize..5).prop_flat_map(|n| (prop::collection::vec(1usize..4, n), perm(n), perm(n)))
    ) {
        let p = Prime::new(5).unwrap();
        let b = tensor_perm(p, &dims, &t.images()).unwrap();
        // after τ, factor k sits at position τ(k)
        let mut moved = vec![0; dims.len()];
        for (k, &d) in dims.iter().enumerate() {
            moved[t.apply(k)] = d;
        }
        let a = tensor_perm(p, &moved, &s.images()).unwrap();
        let st = tensor_perm(p, &dims, &s.compose(&t).images()).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap(), st);
        prop_assert!(a.inverse().is_some());
    }
}
