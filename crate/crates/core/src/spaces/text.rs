//! Subspace text format: the matrix header, `dim <d>`, then `d` vectorized
//! basis rows of length `rows*cols`; an affine space appends a `base`
//! line followed by one matrix block.
//!
//! ```text
//! field gf 2
//! size 2 2
//! dim 1
//! 1 0 0 1
//! base
//! 0 1
//! 0 0
//! ```
//!
//! The basis need not be canonical on input; it is re-reduced when read.

use super::{AffineSubspace, LinearSubspace, Shape};
use crate::error::{Error, Result};
use crate::exactalg::text::{parse_usizes, write_block, write_header, Lines};
use crate::exactalg::Matrix;

fn write_linear(out: &mut String, s: &LinearSubspace) {
    let shape = s.shape();
    write_header(out, shape.field, shape.rows, shape.cols);
    out.push_str(&format!("dim {}\n", s.dim()));
    write_block(out, s.basis());
}

impl LinearSubspace {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write_linear(&mut out, self);
        out
    }

    /// Parse a linear space; a non-zero `base` section is rejected.
    pub fn from_text(text: &str) -> Result<Self> {
        let aff = AffineSubspace::from_text(text)?;
        if !aff.is_linear() {
            return Err(Error::parse(0, "expected a linear subspace, found an affine one with nonzero base"));
        }
        Ok(aff.linear)
    }
}

impl AffineSubspace {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write_linear(&mut out, &self.linear);
        if !self.is_linear() {
            out.push_str("base\n");
            write_block(&mut out, &self.base);
        }
        out
    }

    /// Parse either variant; a missing `base` section means the origin.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        let (field, rows, cols) = lines.header()?;
        let shape = Shape::new(field, rows, cols);
        let (n, args) = lines.keyword("dim")?;
        let dim = parse_usizes(n, &args, 1)?[0];
        if dim > shape.ambient_dim() {
            return Err(Error::parse(n, format!("dim {dim} exceeds ambient dimension {}", shape.ambient_dim())));
        }
        let vectors = lines.block(field, dim, shape.ambient_dim())?;
        let linear = LinearSubspace::from_vectors(shape, &vectors);
        if linear.dim() != dim {
            return Err(Error::parse(n, format!("basis rows are dependent (rank {} < {dim})", linear.dim())));
        }
        let base = if lines.peek() == Some("base") {
            lines.keyword("base")?;
            lines.block(field, rows, cols)?
        } else {
            Matrix::zeros(field, rows, cols)
        };
        lines.finish()?;
        AffineSubspace::new(linear, &base)
    }
}
