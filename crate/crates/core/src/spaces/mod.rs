//! Linear and affine subspaces of the matrix space `Mat_{n,p}(K)`.
//!
//! A matrix is identified with its row-major vectorization, a vector of
//! length `n * p`. A linear subspace is stored as the reduced row-echelon
//! basis of those vectors, which makes equal subspaces structurally equal.
//! An affine subspace adds a base point reduced against that basis: it has
//! zero coordinates at every pivot position.

mod elements;
mod enumerate;
mod text;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar};

pub use elements::{ElementCursor, Elements, DEFAULT_ELEMENT_BUDGET};
pub use enumerate::{count_subspaces, enumerate_affine, enumerate_subspaces, AffineEnumeration, SubspaceEnumeration};

/// The ambient space `Mat_{rows,cols}(field)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
}

impl Shape {
    pub fn new(field: Field, rows: usize, cols: usize) -> Shape {
        Shape { field, rows, cols }
    }

    pub fn ambient_dim(&self) -> usize {
        self.rows * self.cols
    }

    pub fn of(m: &Matrix) -> Shape {
        Shape::new(m.field(), m.nrows(), m.ncols())
    }

    pub(crate) fn check(&self, m: &Matrix) -> Result<()> {
        if m.field() != self.field {
            return Err(Error::FieldMismatch(self.field, m.field()));
        }
        if m.dims() != (self.rows, self.cols) {
            return Err(Error::shape(self, format!("{}x{}", m.nrows(), m.ncols())));
        }
        Ok(())
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} over {}", self.rows, self.cols, self.field)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    shape: Shape,
    /// `dim x (rows*cols)`, reduced row-echelon, no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl LinearSubspace {
    /// Span of the given matrices.
    pub fn from_generators(shape: Shape, gens: &[Matrix]) -> Result<Self> {
        for g in gens {
            shape.check(g)?;
        }
        let m = shape.ambient_dim();
        let stacked = Matrix::from_fn(shape.field, gens.len(), m, |i, k| gens[i].get(k / shape.cols, k % shape.cols));
        Ok(Self::from_vectors(shape, &stacked))
    }

    /// Span of the rows of `vectors` (each of length `rows*cols`).
    pub fn from_vectors(shape: Shape, vectors: &Matrix) -> Self {
        assert_eq!(vectors.ncols(), shape.ambient_dim(), "vector length mismatch");
        let r = vectors.rref();
        let dim = r.pivots.len();
        let idx: Vec<usize> = (0..dim).collect();
        LinearSubspace { shape, basis: r.matrix.select_rows(&idx), pivots: r.pivots }
    }

    pub(crate) fn from_rref_unchecked(shape: Shape, basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.nrows(), pivots.len());
        LinearSubspace { shape, basis, pivots }
    }

    pub fn full(shape: Shape) -> Self {
        let m = shape.ambient_dim();
        LinearSubspace { shape, basis: Matrix::identity(shape.field, m), pivots: (0..m).collect() }
    }

    pub fn zero(shape: Shape) -> Self {
        LinearSubspace { shape, basis: Matrix::zeros(shape.field, 0, shape.ambient_dim()), pivots: Vec::new() }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.shape.ambient_dim() - self.dim()
    }

    /// Canonical basis vectors as rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| Matrix::unvectorize(&self.basis, i, self.shape.rows, self.shape.cols).unwrap()).collect()
    }

    /// Reduce a vectorized matrix against the basis: the result has zero
    /// coordinates at every pivot and differs from the input by a member.
    pub(crate) fn reduce(&self, m: &Matrix) -> Matrix {
        let mut v = m.clone();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = v.get(pc / self.shape.cols, pc % self.shape.cols);
            if c.is_zero() {
                continue;
            }
            let b = Matrix::unvectorize(&self.basis, row, self.shape.rows, self.shape.cols).unwrap();
            v = v.sub(&b.scale(&c)).unwrap();
        }
        v
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool> {
        self.shape.check(m)?;
        Ok(self.reduce(m).is_zero())
    }

    /// Member with the given coordinates on the canonical basis.
    pub fn combination(&self, coords: &[Scalar]) -> Matrix {
        assert_eq!(coords.len(), self.dim());
        let mut acc = Matrix::zeros(self.shape.field, self.shape.rows, self.shape.cols);
        for (c, b) in coords.iter().zip(self.basis_matrices()) {
            acc = acc.add(&b.scale(c)).unwrap();
        }
        acc
    }

    /// Image `{P M Q : M in self}` under an equivalence transformation.
    pub fn transform(&self, p: &Matrix, q: &Matrix) -> Result<Self> {
        let images = self.basis_matrices().iter().map(|b| crate::exactalg::equivalence_apply(p, b, q)).collect::<Result<Vec<_>>>()?;
        let shape = Shape::new(self.shape.field, p.nrows(), q.ncols());
        Self::from_generators(shape, &images)
    }

    /// This space as an affine space through the origin.
    pub fn to_affine(&self) -> AffineSubspace {
        AffineSubspace { base: Matrix::zeros(self.shape.field, self.shape.rows, self.shape.cols), linear: self.clone() }
    }

    pub fn contains_subspace(&self, other: &LinearSubspace) -> Result<bool> {
        for b in other.basis_matrices() {
            if !self.contains(&b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSubspace {
    linear: LinearSubspace,
    base: Matrix,
}

impl AffineSubspace {
    /// The coset `point + linear`, with the canonical base point.
    pub fn new(linear: LinearSubspace, point: &Matrix) -> Result<Self> {
        linear.shape.check(point)?;
        let base = linear.reduce(point);
        Ok(AffineSubspace { linear, base })
    }

    pub(crate) fn from_canonical_unchecked(linear: LinearSubspace, base: Matrix) -> Self {
        AffineSubspace { linear, base }
    }

    pub fn linear(&self) -> &LinearSubspace {
        &self.linear
    }

    pub fn base(&self) -> &Matrix {
        &self.base
    }

    pub fn shape(&self) -> Shape {
        self.linear.shape
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn codim(&self) -> usize {
        self.linear.codim()
    }

    pub fn is_linear(&self) -> bool {
        self.base.is_zero()
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool> {
        self.linear.shape.check(m)?;
        self.linear.contains(&m.sub(&self.base)?)
    }

    pub fn transform(&self, p: &Matrix, q: &Matrix) -> Result<Self> {
        let linear = self.linear.transform(p, q)?;
        let base = crate::exactalg::equivalence_apply(p, &self.base, q)?;
        AffineSubspace::new(linear, &base)
    }
}

impl From<LinearSubspace> for AffineSubspace {
    fn from(l: LinearSubspace) -> Self {
        l.to_affine()
    }
}
