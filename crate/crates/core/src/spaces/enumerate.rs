//! Duplicate-free enumeration of subspaces through their RREF bases.
//!
//! A `d`-dimensional subspace of `K^m` has a unique RREF basis, determined
//! by its pivot columns and by the free entries right of each pivot that
//! are not themselves in pivot columns (one Schubert cell per pivot set).
//! Cells are visited in lexicographic order of pivot sets; inside a cell,
//! free entries count in base `q` with the first free entry most significant.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;

use super::{AffineSubspace, LinearSubspace, Shape};
use crate::error::{Error, Result};
use crate::exactalg::Matrix;

/// Number of `codim`-codimensional subspaces of an `ambient`-dimensional
/// space over GF(q): the Gaussian binomial by its product formula.
pub fn count_subspaces(ambient: usize, codim: usize, q: u64) -> BigUint {
    if codim > ambient {
        return BigUint::from(0u32);
    }
    let q = BigUint::from(q);
    let k = codim.min(ambient - codim);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((ambient - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

#[derive(Clone, Debug)]
struct Cell {
    pivots: Vec<usize>,
    /// `(row, column)` of each free entry, in digit order.
    free: Vec<(usize, usize)>,
    offset: u64,
    size: u64,
}

/// All linear subspaces of a given codimension, addressable by index.
#[derive(Clone, Debug)]
pub struct SubspaceEnumeration {
    shape: Shape,
    dim: usize,
    q: u32,
    cells: Vec<Cell>,
    total: u64,
}

pub fn enumerate_subspaces(shape: Shape, codim: usize) -> Result<SubspaceEnumeration> {
    let q = shape.field.require_finite()?;
    let m = shape.ambient_dim();
    if codim > m {
        return Err(Error::OutOfRange { what: "codimension", value: codim, allowed: format!("0..={m}") });
    }
    let dim = m - codim;
    let mut cells = Vec::new();
    let mut offset = 0u64;
    let overflow = || Error::Budget { needed: count_subspaces(m, codim, q as u64).to_string(), budget: u64::MAX };
    for pivots in (0..m).combinations(dim) {
        let free: Vec<(usize, usize)> =
            pivots.iter().enumerate().flat_map(|(row, &pc)| (pc + 1..m).filter(|c| !pivots.contains(c)).map(move |c| (row, c))).collect();
        let size = super::elements::element_count(q, free.len()).ok_or_else(overflow)?;
        cells.push(Cell { pivots, free, offset, size });
        offset = offset.checked_add(size).ok_or_else(overflow)?;
    }
    Ok(SubspaceEnumeration { shape, dim, q, cells, total: offset })
}

impl SubspaceEnumeration {
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn codim(&self) -> usize {
        self.shape.ambient_dim() - self.dim
    }

    /// The subspace with the given index; panics when out of range.
    pub fn get(&self, index: u64) -> LinearSubspace {
        assert!(index < self.total, "subspace index {index} out of range");
        let cell = &self.cells[self.cells.partition_point(|c| c.offset + c.size <= index)];
        let mut local = index - cell.offset;
        let m = self.shape.ambient_dim();
        let mut data = vec![0u32; self.dim * m];
        for (row, &pc) in cell.pivots.iter().enumerate() {
            data[row * m + pc] = 1;
        }
        for &(row, col) in cell.free.iter().rev() {
            data[row * m + col] = (local % self.q as u64) as u32;
            local /= self.q as u64;
        }
        let basis = Matrix::from_raw_mod(self.q, self.dim, m, data);
        LinearSubspace::from_rref_unchecked(self.shape, basis, cell.pivots.clone())
    }

    pub fn iter(&self) -> impl Iterator<Item = LinearSubspace> + '_ {
        (0..self.total).map(move |i| self.get(i))
    }
}

/// All affine subspaces of a given codimension: each linear subspace
/// followed by its `q^codim` cosets.
#[derive(Clone, Debug)]
pub struct AffineEnumeration {
    linear: SubspaceEnumeration,
    cosets: u64,
    total: u64,
}

pub fn enumerate_affine(shape: Shape, codim: usize) -> Result<AffineEnumeration> {
    let linear = enumerate_subspaces(shape, codim)?;
    let budget_err = || Error::Budget { needed: "affine subspace count".into(), budget: u64::MAX };
    let cosets = super::elements::element_count(linear.q, codim).ok_or_else(budget_err)?;
    let total = linear.total.checked_mul(cosets).ok_or_else(budget_err)?;
    Ok(AffineEnumeration { linear, cosets, total })
}

impl AffineEnumeration {
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn codim(&self) -> usize {
        self.linear.codim()
    }

    pub fn linear(&self) -> &SubspaceEnumeration {
        &self.linear
    }

    /// Index of the linear part of affine subspace `index`.
    pub fn linear_index(&self, index: u64) -> u64 {
        index / self.cosets
    }

    pub fn get(&self, index: u64) -> AffineSubspace {
        let lin = self.linear.get(index / self.cosets);
        let mut coset = index % self.cosets;
        let q = self.linear.q as u64;
        let m = self.linear.shape.ambient_dim();
        let non_pivots: Vec<usize> = (0..m).filter(|c| !lin.pivots().contains(c)).collect();
        let mut base = vec![0u32; m];
        for &c in non_pivots.iter().rev() {
            base[c] = (coset % q) as u32;
            coset /= q;
        }
        let shape = self.linear.shape;
        let base = Matrix::from_raw_mod(self.linear.q, shape.rows, shape.cols, base);
        AffineSubspace::from_canonical_unchecked(lin, base)
    }

    pub fn iter(&self) -> impl Iterator<Item = AffineSubspace> + '_ {
        (0..self.total).map(move |i| self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Field;
    use std::collections::HashSet;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(count_subspaces(6, 1, 2), BigUint::from(63u32));
        assert_eq!(count_subspaces(4, 2, 2), BigUint::from(35u32));
        assert_eq!(count_subspaces(7, 0, 5), BigUint::one());
        assert_eq!(count_subspaces(9, 1, 3), BigUint::from(9841u32));
        assert_eq!(count_subspaces(3, 4, 2), BigUint::from(0u32));
    }

    #[test]
    fn enumeration_examples() {
        let gf2 = Field::gf2();
        assert_eq!(enumerate_subspaces(Shape::new(gf2, 3, 2), 1).unwrap().len(), 63);
        assert_eq!(enumerate_subspaces(Shape::new(gf2, 3, 2), 0).unwrap().len(), 1);
        let e = enumerate_subspaces(Shape::new(gf2, 2, 2), 2).unwrap();
        assert_eq!(e.len(), 35);
        let all: HashSet<_> = e.iter().collect();
        assert_eq!(all.len(), 35);
        for s in &all {
            assert_eq!(s.codim(), 2);
            assert_eq!(LinearSubspace::from_vectors(s.shape(), s.basis()), *s);
        }
        assert!(matches!(enumerate_subspaces(Shape::new(Field::Rational, 1, 2), 1), Err(Error::InfiniteField(_))));
        assert!(enumerate_subspaces(Shape::new(gf2, 1, 2), 3).is_err());
    }

    #[test]
    fn affine_examples() {
        let gf2 = Field::gf2();
        let e = enumerate_affine(Shape::new(gf2, 2, 2), 1).unwrap();
        assert_eq!(e.len(), 30);
        let all: HashSet<_> = e.iter().collect();
        assert_eq!(all.len(), 30);
        for a in &all {
            let again = AffineSubspace::new(a.linear().clone(), a.base()).unwrap();
            assert_eq!(&again, a);
        }
        let full = enumerate_affine(Shape::new(gf2, 2, 2), 0).unwrap();
        assert_eq!(full.len(), 1);
        assert!(full.get(0).base().is_zero());
    }
}
