//! Full-rank lines in spaces of matrices, over exact fields.
//!
//! Given a subspace `S` of `n x p` matrices (`n >= p`) and a direction `N`
//! of rank below `p`, the question is whether some `A` in `S` makes every
//! matrix `A + tN` (for all scalars `t`) have full column rank `p`. This
//! crate provides the exact arithmetic to answer that question, certificates
//! for the answers, generators for the known extremal constructions, and
//! exhaustive verification campaigns over small finite fields.
//!
//! Modules, bottom-up:
//!
//! - [`exactalg`]: GF(p) and rational scalars, dense matrices, rank/det/rref.
//! - [`polypencil`]: polynomials, `det(A + tN)` and maximal-minor gcds.
//! - [`spaces`]: linear and affine subspaces of matrix space, enumeration.
//! - [`lines`]: full-rank line checks, side conditions, witness search.
//! - [`gallery`]: the explicit constructions (witnesses, sharpness, counterexamples).
//! - [`verify`]: verification campaigns and their reports.
//! - [`cli`]: the command-line frontend used by the `fullrank` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod gallery;
pub mod lines;
pub mod polypencil;
pub mod spaces;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{canonical_n, equivalence_apply, Field, Matrix, Scalar};
