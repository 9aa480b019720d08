//! The p-Jacobi map γ_p vanishes on gl(X) and not on the truncated free
//! Lie algebra generated by L2.

use verp::lie_algebra::{GammaContext, GlAlgebra, PJacobi, TruncatedFree};
use verp::{Prime, VerClass};

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    let ctx = GammaContext::new(p)?;
    let gl = GlAlgebra::new(&VerClass::from_mults(p, vec![1, 1, 0, 0])?)?;
    println!("gl(L1+L2) = {}, Lie in Ver_5: {}", gl.class(), gl.identities_hold()?);
    println!("  γ_5 matrix: {:?}", gl.gamma_matrix(&ctx)?);
    let gl = GlAlgebra::new(&VerClass::from_mults(p, vec![0, 1, 1, 0])?)?;
    println!("gl(L2+L3) = {}", gl.class());
    println!("  γ_5 matrix: {:?}", gl.gamma_matrix(&ctx)?);
    let l = TruncatedFree::new(&VerClass::simple(p, 2)?, 5)?;
    println!("truncated free algebra on L2: {:?}", l.components());
    let g = l.gamma_matrix(&ctx)?;
    println!("  γ_5 matrix: {g:?}");
    println!("  kernel has dimension {} of {}", g.cols() - g.rank(), g.cols());
    Ok(())
}
