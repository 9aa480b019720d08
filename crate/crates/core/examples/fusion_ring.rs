//! The Grothendieck ring of Ver_p: fusion table, Jordan-type oracle, and
//! symmetric/exterior powers of the simples.

use verp::rep::jordan_object;
use verp::ring::{fuse, power_table};
use verp::ss::ver_class;
use verp::Prime;

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    let n = p.usize();
    println!("fusion table of Ver_{p}:");
    for a in 1..n {
        let row: Vec<String> = (1..n).map(|b| fuse(p, a, b).map(|c| c.to_string())).collect::<verp::Result<_>>()?;
        println!("  L{a} ⊗ -: {}", row.join(" | "));
    }
    let j = jordan_object(p, 2)?;
    println!("J2 ⊗ J3 has Jordan type {} and class {}", j.tensor(&jordan_object(p, 3)?).jordan_type(), ver_class(&j.tensor(&jordan_object(p, 3)?)));
    let t = power_table(p)?;
    for m in 2..n - 1 {
        let s: Vec<String> = (0..=n - m).map(|i| t.sym(m, i).to_string()).collect();
        let e: Vec<String> = (0..=m).map(|i| t.ext(m, i).to_string()).collect();
        println!("S^* L{m} = [{}], Λ^* L{m} = [{}]", s.join(", "), e.join(", "));
    }
    Ok(())
}
