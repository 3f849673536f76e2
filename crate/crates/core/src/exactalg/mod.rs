//! Exact scalar arithmetic and dense matrix primitives.

mod field;
pub mod gf2;
mod matrix;
pub(crate) mod modp;
pub(crate) mod text;

pub(crate) use field::root_order_key;
pub use field::{Field, Scalar, MODULUS_LIMIT};
pub use matrix::{canonical_n, equivalence_apply, Blocks, Matrix, Rref};
