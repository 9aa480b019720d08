//! FLie classes from the Hilbert series identity, checked against direct
//! computation and against Witt's necklace numbers.

use verp::free_lie::flie_class_direct;
use verp::ring::{flie_classes, witt_oracle};
use verp::{Prime, VerClass};

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    let v = VerClass::simple(p, 2)?;
    for (k, c) in flie_classes(&v, 6)?.iter().enumerate() {
        let n = k + 1;
        println!("FLie_{n}(L2) = {c:<12} direct: {}", flie_class_direct(&v, n)?);
    }
    let two = VerClass::from_mults(p, vec![2, 0, 0, 0])?;
    let rec: Vec<i64> = flie_classes(&two, 8)?.iter().map(|c| c.get(1)).collect();
    let witt: Vec<i128> = (1..=8).map(|n| witt_oracle(2, n)).collect::<verp::Result<_>>()?;
    println!("2-dim classical space: {rec:?} vs Witt {witt:?}");
    Ok(())
}
