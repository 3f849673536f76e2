use std::ops::Range;

use rand::Rng;

use super::{AffineSubspace, LinearSubspace};
use crate::error::{Error, Result};
use crate::exactalg::Matrix;

/// Element budget used when callers do not ask for more.
pub const DEFAULT_ELEMENT_BUDGET: u64 = 1 << 24;

/// `q^dim`, or `None` on overflow.
pub(crate) fn element_count(q: u32, dim: usize) -> Option<u64> {
    (q as u64).checked_pow(u32::try_from(dim).ok()?)
}

/// Walks the members of a finite affine space in coordinate-counting order
/// over raw residue vectors. The first basis vector is the most significant
/// digit, so index `i` has coordinates given by the base-`q` digits of `i`.
pub struct ElementCursor {
    p: u32,
    rows: Vec<Vec<u32>>,
    digits: Vec<u32>,
    current: Vec<u32>,
    index: u64,
    end: u64,
    shape: (usize, usize),
}

impl ElementCursor {
    pub fn new(space: &AffineSubspace, range: Range<u64>) -> Result<Self> {
        let shape = space.shape();
        let p = shape.field.require_finite()?;
        let total =
            element_count(p, space.dim()).ok_or_else(|| Error::Budget { needed: format!("{p}^{}", space.dim()), budget: u64::MAX })?;
        let end = range.end.min(total);
        let basis = space.linear().basis().raw_mod().unwrap();
        let m = shape.ambient_dim();
        let rows: Vec<Vec<u32>> = (0..space.dim()).map(|i| basis[i * m..(i + 1) * m].to_vec()).collect();
        let mut cursor = ElementCursor {
            p,
            digits: vec![0; rows.len()],
            current: space.base().raw_mod().unwrap().to_vec(),
            rows,
            index: range.start,
            end,
            shape: (shape.rows, shape.cols),
        };
        let mut rest = range.start.min(total.saturating_sub(1));
        for i in (0..cursor.rows.len()).rev() {
            cursor.digits[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        for i in 0..cursor.rows.len() {
            for _ in 0..cursor.digits[i] {
                add_row(&mut cursor.current, &cursor.rows[i], p);
            }
        }
        Ok(cursor)
    }

    /// Index of the current element, if any remain.
    pub fn index(&self) -> Option<u64> {
        (self.index < self.end).then_some(self.index)
    }

    /// Current element as a raw row-major residue vector.
    pub fn raw(&self) -> &[u32] {
        &self.current
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_raw_mod(self.p, self.shape.0, self.shape.1, self.current.clone())
    }

    pub fn advance(&mut self) {
        self.index += 1;
        if self.index >= self.end {
            return;
        }
        for i in (0..self.rows.len()).rev() {
            add_row(&mut self.current, &self.rows[i], self.p);
            self.digits[i] += 1;
            if self.digits[i] < self.p {
                break;
            }
            self.digits[i] = 0;
        }
    }
}

fn add_row(dst: &mut [u32], row: &[u32], p: u32) {
    for (d, &r) in dst.iter_mut().zip(row) {
        let s = *d + r;
        *d = if s >= p { s - p } else { s };
    }
}

/// Iterator over all members of a finite (affine) space.
pub struct Elements {
    cursor: ElementCursor,
}

impl Iterator for Elements {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        self.cursor.index()?;
        let m = self.cursor.matrix();
        self.cursor.advance();
        Some(m)
    }
}

impl AffineSubspace {
    /// Number of members, `None` for infinite fields or on overflow.
    pub fn element_count(&self) -> Option<u64> {
        element_count(self.shape().field.order()?, self.dim())
    }

    /// All `q^dim` members in coordinate-counting order.
    pub fn elements(&self, budget: u64) -> Result<Elements> {
        let q = self.shape().field.require_finite()?;
        match element_count(q, self.dim()) {
            Some(n) if n <= budget => Ok(Elements { cursor: ElementCursor::new(self, 0..n)? }),
            _ => Err(Error::Budget { needed: format!("{q}^{}", self.dim()), budget }),
        }
    }

    /// The member with the given index in the element order.
    pub fn element_at(&self, index: u64) -> Result<Matrix> {
        Ok(ElementCursor::new(self, index..index + 1)?.matrix())
    }

    /// Uniform random member, filling every free coordinate independently.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Matrix> {
        let q = self.shape().field.require_finite()?;
        let coords: Vec<_> = (0..self.dim()).map(|_| self.shape().field.from_i64(rng.gen_range(0..q) as i64)).collect();
        self.base().add(&self.linear().combination(&coords))
    }
}

impl LinearSubspace {
    pub fn elements(&self, budget: u64) -> Result<Elements> {
        self.to_affine().elements(budget)
    }
}
