//! Computations in the Verlinde category Ver_p: representations of Z/p over
//! F_p modulo negligible morphisms.

pub mod acceptance;
pub mod error;
pub mod expr;
pub mod fp;
pub mod free_lie;
pub mod koszul;
pub mod lie_algebra;
pub mod lie_operad;
pub mod matrix;
pub mod rep;
pub mod ring;
pub mod ss;
pub mod sym_group;

pub use error::{Error, Result};
pub use fp::{FpScalar, Prime};
pub use matrix::FpMatrix;
pub use ss::VerClass;
