use proptest::prelude::*;
use verp::rep::{coev, ev, hom_basis, jordan_object, jordan_sum, sym_power_object, RepMorphism, RepObject};
use verp::ring::fuse_classes;
use verp::ss::{decompose, decompose_via_jordan, ver_class, ver_matrix};
use verp::{FpMatrix, Prime};

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![3u32, 5, 7]).prop_map(|p| Prime::new(p).unwrap())
}

fn object_at(p: Prime, max_blocks: usize) -> impl Strategy<Value = RepObject> {
    prop::collection::vec(1..=p.usize(), 1..=max_blocks).prop_map(move |s| jordan_sum(p, &s).unwrap())
}

fn object() -> impl Strategy<Value = RepObject> {
    prime().prop_flat_map(|p| object_at(p, 3))
}

fn random_hom(x: &RepObject, y: &RepObject, coeffs: &[u32]) -> FpMatrix {
    let p = x.prime();
    let mut f = FpMatrix::zeros(p, y.dim(), x.dim());
    for (b, &c) in hom_basis(x, y).iter().zip(coeffs.iter().cycle()) {
        f = f.add(&b.scale(c % p.get())).unwrap();
    }
    f
}

proptest! {
    #[test]
    fn unipotent_of_order_p(x in object(), y in object()) {
        if x.prime() == y.prime() {
            let z = x.tensor(&y);
            let p = z.prime();
            prop_assert!(z.nilpotent().pow(p.get()).is_zero());
            prop_assert_eq!(z.jordan_type().dim(), z.dim());
        }
    }

    #[test]
    fn zigzag_identities(x in object()) {
        let one = RepMorphism::identity(&x);
        let left = one.tensor(&ev(&x)).compose(&coev(&x).tensor(&one)).unwrap();
        prop_assert_eq!(left.t, FpMatrix::identity(x.prime(), x.dim()));
    }

    #[test]
    fn hom_basis_intertwines(x in object_at(Prime::new(5).unwrap(), 3), y in object_at(Prime::new(5).unwrap(), 3)) {
        for t in hom_basis(&x, &y) {
            prop_assert!(x.intertwines(&y, &t));
        }
    }

    #[test]
    fn splitting_accounts_for_dimension(x in object()) {
        let p = x.prime();
        let c = ver_class(&x);
        let projective = x.jordan_type().count(p.usize());
        prop_assert_eq!(c.lift_dim() as usize + p.usize() * projective, x.dim());
        let s = decompose(&x).unwrap();
        prop_assert!(s.verify(&x));
        prop_assert_eq!(s.class(), c.clone());
        prop_assert_eq!(decompose_via_jordan(&x).unwrap().class(), c);
    }

    #[test]
    fn functoriality(
        (x, y, z, coeffs) in (object_at(Prime::new(5).unwrap(), 2), object_at(Prime::new(5).unwrap(), 2),
            object_at(Prime::new(5).unwrap(), 2), prop::collection::vec(0u32..5, 1..12))
    ) {
        let f = random_hom(&x, &y, &coeffs);
        let g = random_hom(&y, &z, &coeffs[1..].iter().chain(&coeffs[..1]).copied().collect::<Vec<_>>());
        let (sx, sy, sz) = (decompose(&x).unwrap(), decompose(&y).unwrap(), decompose(&z).unwrap());
        let whole = ver_matrix(&g.mul(&f).unwrap(), &sx, &sz).unwrap();
        let parts = ver_matrix(&g, &sy, &sz).unwrap().compose(&ver_matrix(&f, &sx, &sy).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn tensor_class_is_fusion(x in object_at(Prime::new(7).unwrap(), 2), y in object_at(Prime::new(7).unwrap(), 2)) {
        prop_assert_eq!(ver_class(&x.tensor(&y)), fuse_classes(&ver_class(&x), &ver_class(&y)));
    }
}

#[test]
fn sym_powers_above_the_cap_are_negligible() {
    let p = Prime::new(7).unwrap();
    for m in 2..=p.usize() - 2 {
        let j = jordan_object(p, m).unwrap();
        for i in p.usize() - m + 1..p.usize() {
            assert!(ver_class(&sym_power_object(&j, i).unwrap()).is_zero(), "S^{i} L{m}");
        }
    }
}
