//! Splitting a representation into simples and reading off Ver-matrices;
//! the swap on L4 ⊗ L4 acts on the unit summand by −1.

use verp::matrix::tensor_perm;
use verp::rep::jordan_object;
use verp::ss::{decompose, ver_matrix, VerMorphism};
use verp::Prime;

fn main() -> verp::Result<()> {
    let p = Prime::new(5)?;
    let minus_one = p.neg(1);
    for m in [2, 4] {
        let x = jordan_object(p, m)?.tensor(&jordan_object(p, m)?);
        let s = decompose(&x)?;
        let swap = ver_matrix(&tensor_perm(p, &[m, m], &[1, 0])?, &s, &s)?;
        let id = VerMorphism::identity(&s.class());
        let sym = swap.add(&id.scale(minus_one))?.kernel_class();
        let alt = swap.add(&id)?.kernel_class();
        println!("L{m} ⊗ L{m} = {}: symmetric {sym}, antisymmetric {alt}", s.class());
        println!("  swap on the L1 block: {:?}", swap.block(1));
    }
    Ok(())
}
