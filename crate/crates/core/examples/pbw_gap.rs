//! S(L) against U(L) = T(V) degree by degree for L = FOLie(V) truncated at 5.

use verp::lie_algebra::{pbw_class_gap, TruncatedFree};
use verp::{Prime, VerClass};

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    for m in [2, 3] {
        let v = VerClass::simple(p, m)?;
        let l = TruncatedFree::new(&v, 5)?;
        println!("V = L{m}");
        for r in pbw_class_gap(l.components(), &v, 5)? {
            println!("  d = {}: S(L) = {:<18} U(L) = {:<18} gap {}", r.degree, r.s_side.to_string(), r.u_side.to_string(), r.difference);
        }
    }
    Ok(())
}
