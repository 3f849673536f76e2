//! Polynomials in one variable and the formal analysis of pencils `A + tN`.

mod pencil;
mod poly;
mod roots;

pub use pencil::{classify_line, det_pencil, det_pencil_laplace, maximal_minors, minor_gcd, LineClass, PencilAnalysis};
pub use poly::Polynomial;
pub use roots::rational_roots;
