//! Koszul complexes of simple objects fail to be exact in degree p, and
//! the homology of a sum is the tensor product of the homologies.

use verp::koszul::{koszul_homology, kunneth_prediction};
use verp::{Prime, VerClass};

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    for m in [2, 3] {
        let h = koszul_homology(&VerClass::simple(p, m)?, 9)?;
        println!("H(K(L{m})) = {h:?}");
    }
    let v = VerClass::from_mults(p, vec![0, 1, 1, 0])?;
    let h = koszul_homology(&v, 10)?;
    println!("H(K({v})) = {h:?}");
    println!("agrees with the product of summands: {}", h == kunneth_prediction(&v)?.restrict(10));
    Ok(())
}
