//! The Dynkin element θ_n, its annihilator, and the S_p-module R_p.

use verp::free_lie::rp_multiplicity_lemmas;
use verp::sym_group::{dynkin_theta, dynkin_theta_dual, rep_rp, right_annihilator};
use verp::Prime;

fn main() -> verp::Result<()> {
    for n in 2..=6 {
        let t = dynkin_theta(n);
        println!("θ_{n}² = {n}θ_{n}: {}", t.mul(&t) == t.scale(n as i64));
    }
    let ann = right_annihilator(&dynkin_theta_dual(3), Prime::new(3)?)?;
    println!("dim Ann_r(θ_3^∨) over F_3 = {}", ann.len());
    let p = Prime::new(5)?;
    println!("θ_5 on R_5 is zero: {}", rep_rp(p).apply_elem(&dynkin_theta(5)).is_zero());
    let r = rp_multiplicity_lemmas(p)?;
    println!(
        "coinvariants of R_5 ⊗ Lie_5: {}; L4-multiplicity space of L2^5 has dim {} and is ≅ R_5: {}",
        r.rp_lie_coinvariants, r.odd_multiplicity, r.isomorphic_to_rp
    );
    println!("other multiplicity spaces {:?} projective: {}", r.other_multiplicities, r.others_projective);
    Ok(())
}
