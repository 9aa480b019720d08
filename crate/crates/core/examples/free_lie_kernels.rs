//! FOLie_n, FLie_n and the kernel E_n of FOLie_n → V^{⊗n}.

use verp::expr::ObjectExpr;
use verp::free_lie::free_lie_report;
use verp::Prime;

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    for e in ["L2", "L3", "L4", "L2+L3", "2*L2"] {
        let v = ObjectExpr::parse(p, e)?.class();
        for n in [4, 5] {
            let r = free_lie_report(&v, n)?;
            println!("V = {e:<6} n = {n}: FOLie = {:<22} FLie = {:<22} E = {}", r.folie.to_string(), r.flie.to_string(), r.e);
        }
    }
    Ok(())
}
