#![allow(dead_code)]

use fullrank::{Field, Matrix};
use proptest::prelude::*;

pub fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::gf2()), Just(Field::gf3()), Just(Field::prime(5).unwrap()), Just(Field::Rational)]
}

pub fn finite_fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::gf2()), Just(Field::gf3()), Just(Field::prime(5).unwrap())]
}

pub fn matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(v[i * cols + j])))
}

/// Sparse-ish matrix of rank below `cols`: a product `B C` with inner
/// dimension `cols - 1`.
pub fn low_rank(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    let inner = cols.saturating_sub(1).max(1);
    (matrix(field, rows, inner), matrix(field, inner, cols), 0..cols).prop_map(move |(b, c, k)| {
        let m = b.mul(&c).unwrap();
        if m.rank() < cols {
            m
        } else {
            Matrix::from_fn(field, rows, cols, |i, j| if j == k { field.zero() } else { m.get(i, j) })
        }
    })
}

pub fn invertible(field: Field, size: usize) -> impl Strategy<Value = Matrix> {
    matrix(field, size, size).prop_filter("invertible", move |m| m.rank() == size)
}

/// Independent count of `k`-dimensional subspaces of `K^m` via the
/// recurrence `[m, k] = [m-1, k-1] + q^k [m-1, k]`.
pub fn gaussian_binomial(m: usize, k: usize, q: u128) -> u128 {
    if k == 0 || k == m {
        return 1;
    }
    if k > m {
        return 0;
    }
    gaussian_binomial(m - 1, k - 1, q) + q.pow(k as u32) * gaussian_binomial(m - 1, k, q)
}
