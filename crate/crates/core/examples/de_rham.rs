//! De Rham cohomology of SV ⊗ ΛV and the Cartan identity d∂ + ∂d = degree.

use verp::koszul::{de_rham_cohomology, BigradedModel};
use verp::{Prime, VerClass};

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    for m in 1..=3 {
        let v = VerClass::simple(p, m)?;
        println!("H(DR(L{m})) through diagonal 9: {:?}", de_rham_cohomology(&v, 9)?);
    }
    let mut k = BigradedModel::new(&VerClass::from_mults(p, vec![0, 1, 1, 0])?)?;
    let ok = (0..=9).map(|d| k.cartan_holds(d)).collect::<verp::Result<Vec<_>>>()?;
    println!("Cartan identity for L2+L3 in diagonals 0..9: {ok:?}");
    Ok(())
}
