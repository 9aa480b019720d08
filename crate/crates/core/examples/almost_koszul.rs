//! (r,s)-Koszul certificates for SL_m and ΛL_m, and the periodic resolution.

use verp::koszul::{almost_koszul_certificates, yoneda_pattern, PeriodicKoszul};
use verp::Prime;

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    for m in [2, 3] {
        let (s, e) = almost_koszul_certificates(p, m)?;
        println!("{}: ({}, {})-Koszul, certified {}", s.algebra, s.r, s.s, s.certified());
        println!("{}: ({}, {})-Koszul, certified {}", e.algebra, e.r, e.s, e.certified());
        let r = PeriodicKoszul::new(p, m, 2)?.check();
        println!("periodic complex for SL{m}: exact {}", r.exact);
        let (gens, agree) = yoneda_pattern(p, m, 2)?;
        let g: Vec<String> = gens.iter().map(|g| format!("({},{}) {}", g.degree, g.diagonal, g.class)).collect();
        println!("  generators {} [pattern {agree}]", g.join(", "));
    }
    Ok(())
}
