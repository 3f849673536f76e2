//! Explicit constructions: witnesses, extremal and sharpness examples, and
//! the counterexample to the constant-determinant strengthening over GF(2).
//!
//! Every generator emits the direction `N` in canonical form
//! `[[I_r, 0], [0, 0]]`; conjugate with [`crate::equivalence_apply`] for
//! other directions.

use crate::error::{Error, Result};
use crate::exactalg::{canonical_n, Field, Matrix};
use crate::polypencil::{det_pencil, Polynomial};
use crate::spaces::{AffineSubspace, LinearSubspace, Shape};

fn units(shape: Shape, keep: impl Fn(usize, usize) -> bool) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..shape.rows {
        for j in 0..shape.cols {
            if keep(i, j) {
                out.push(Matrix::unit(shape.field, shape.rows, shape.cols, i, j));
            }
        }
    }
    out
}

/// A matrix `A` such that `A + t * canonical_n(n, p, r)` has rank `p` for
/// every `t`.
///
/// For `n > p` this is the shifted identity (ones just below the diagonal);
/// for `n = p` the same plus a one in the top-right corner. Neither depends
/// on `r`.
pub fn lemma1_witness(n: usize, p: usize, r: usize, field: Field) -> Result<Matrix> {
    if p == 0 || n < p {
        return Err(Error::Hypothesis(format!("need n >= p >= 1, got n={n}, p={p}")));
    }
    if r >= p {
        return Err(Error::OutOfRange { what: "rank", value: r, allowed: format!("0..{p}") });
    }
    let mut a = Matrix::zeros(field, n, p);
    let one = field.one();
    if n > p {
        for j in 0..p {
            a = a.with_entry(j + 1, j, &one);
        }
    } else {
        a = a.with_entry(0, n - 1, &one);
        for j in 0..n - 1 {
            a = a.with_entry(j + 1, j, &one);
        }
    }
    Ok(a)
}

/// The codimension `n - 1` space of matrices whose first column vanishes
/// below the first row, with `N = canonical_n(n, p, p - 1)`.
///
/// Every line `A + tN` with `A` in the space meets a matrix with zero first
/// column, so no witness exists.
pub fn sharpness_example(n: usize, p: usize, field: Field) -> Result<(LinearSubspace, Matrix)> {
    if p < 2 || n < p {
        return Err(Error::Hypothesis(format!("need n >= p >= 2, got n={n}, p={p}")));
    }
    let shape = Shape::new(field, n, p);
    let space = LinearSubspace::from_generators(shape, &units(shape, |i, j| j > 0 || i == 0))?;
    Ok((space, canonical_n(field, n, p, p - 1)?))
}

/// The affine hyperplane `{M : M[n-1][n-1] = 1}` with `N = canonical_n(n, n, n - 1)`.
///
/// For each member, `det(M + tN)` is monic of degree `n - 1`.
pub fn remark1_example(n: usize, field: Field) -> Result<(AffineSubspace, Matrix)> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "size", value: n, allowed: ">= 2".into() });
    }
    let shape = Shape::new(field, n, n);
    let linear = LinearSubspace::from_generators(shape, &units(shape, |i, j| (i, j) != (n - 1, n - 1)))?;
    let base = Matrix::unit(field, n, n, n - 1, n - 1);
    Ok((AffineSubspace::new(linear, &base)?, canonical_n(field, n, n, n - 1)?))
}

/// 3x3 matrices over GF(2) with entry `(0,2) = a` and `(2,1) = a + 1`, all
/// other entries free, and `N = diag(1, 1, 0)`. An affine hyperplane in
/// which no member has a constant nonzero `det(M + tN)`.
pub fn remark2_f2_example() -> (AffineSubspace, Matrix) {
    let f = Field::gf2();
    let shape = Shape::new(f, 3, 3);
    let mut gens = units(shape, |i, j| (i, j) != (0, 2) && (i, j) != (2, 1));
    gens.push(Matrix::unit(f, 3, 3, 0, 2).add(&Matrix::unit(f, 3, 3, 2, 1)).unwrap());
    let linear = LinearSubspace::from_generators(shape, &gens).expect("generators match shape");
    let base = Matrix::unit(f, 3, 3, 2, 1);
    let space = AffineSubspace::new(linear, &base).expect("base matches shape");
    (space, canonical_n(f, 3, 3, 2).unwrap())
}

/// Both sides of the block expansion for `M = [[A, C], [B, d]]` over GF(2)
/// with `A` of size 2:
/// `det(M + tN)` and `d det(A + t I) + t BC + B adj(A) C`.
///
/// Only meaningful in characteristic 2, where the signs of the general
/// expansion disappear.
pub fn remark2_adjugate_sides(m: &Matrix) -> Result<(Polynomial, Polynomial)> {
    let f = m.field();
    if m.dims() != (3, 3) {
        return Err(Error::shape("3x3", format!("{}x{}", m.nrows(), m.ncols())));
    }
    let lhs = det_pencil(m, &canonical_n(f, 3, 3, 2)?)?;
    let blocks = m.block_decompose(2)?;
    let d = blocks.d.get(0, 0);
    let det_shift = det_pencil(&blocks.a, &Matrix::identity(f, 2))?;
    let bc = blocks.b.mul(&blocks.c)?.get(0, 0);
    let badjc = blocks.b.mul(&blocks.a.adjugate()?)?.mul(&blocks.c)?.get(0, 0);
    let rhs = det_shift.scale(&d).add(&Polynomial::linear(f.zero(), bc)).add(&Polynomial::constant(badjc));
    Ok((lhs, rhs))
}

/// Matrices vanishing on the last `p - r` columns: dimension `n r`, every
/// member of rank at most `r`.
pub fn flanders_extremal(n: usize, p: usize, r: usize, field: Field) -> Result<LinearSubspace> {
    if !(r <= p && p <= n) {
        return Err(Error::Hypothesis(format!("need r <= p <= n, got n={n}, p={p}, r={r}")));
    }
    let shape = Shape::new(field, n, p);
    LinearSubspace::from_generators(shape, &units(shape, |_, j| j < r))
}
