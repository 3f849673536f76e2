use itertools::Itertools;

use super::{rational_roots, Polynomial};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};

/// How a line `A + tN` behaves with respect to full column rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineClass {
    /// Every maximal minor vanishes identically: rank < p for all t.
    IdenticallyZero,
    /// The minor gcd is a nonzero constant.
    ConstantNonzero,
    /// The minor gcd has positive degree but no root in the field.
    NonconstantRootFree,
    /// Rank drops at this `t` (the smallest such in root order).
    HasRoot(Scalar),
}

impl LineClass {
    /// True when every matrix of the line has full column rank.
    pub fn is_full_rank(&self) -> bool {
        matches!(self, LineClass::ConstantNonzero | LineClass::NonconstantRootFree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilAnalysis {
    /// `det(A + tN)` when square, otherwise the monic gcd of the maximal minors.
    pub polynomial: Polynomial,
    pub class: LineClass,
}

fn check_pair(a: &Matrix, n: &Matrix) -> Result<()> {
    if a.field() != n.field() {
        return Err(Error::FieldMismatch(a.field(), n.field()));
    }
    if a.dims() != n.dims() {
        return Err(Error::shape(format!("{}x{}", a.nrows(), a.ncols()), format!("{}x{}", n.nrows(), n.ncols())));
    }
    Ok(())
}

fn pencil_entries(a: &Matrix, n: &Matrix) -> Vec<Polynomial> {
    let (rows, cols) = a.dims();
    (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| Polynomial::linear(a.get(i, j), n.get(i, j))).collect()
}

/// `det(A + tN)` as a polynomial in `t`, by fraction-free (Bareiss)
/// elimination over `K[t]`. All divisions are exact.
pub fn det_pencil(a: &Matrix, n: &Matrix) -> Result<Polynomial> {
    check_pair(a, n)?;
    if !a.is_square() {
        return Err(Error::NotSquare(a.nrows(), a.ncols()));
    }
    let size = a.nrows();
    let field = a.field();
    let mut m = pencil_entries(a, n);
    let mut prev = Polynomial::constant(field.one());
    let mut negate = false;
    for k in 0..size {
        if m[k * size + k].is_zero() {
            let Some(piv) = (k + 1..size).find(|&r| !m[r * size + k].is_zero()) else {
                return Ok(Polynomial::zero(field));
            };
            for j in 0..size {
                m.swap(k * size + j, piv * size + j);
            }
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = m[k * size + k].mul(&m[i * size + j]).sub(&m[i * size + k].mul(&m[k * size + j]));
                m[i * size + j] = num.exact_div(&prev);
            }
        }
        prev = m[k * size + k].clone();
    }
    Ok(if negate { prev.neg() } else { prev })
}

/// `det(A + tN)` by cofactor expansion along the first row. Exponential;
/// kept as an independent route for cross-checking [`det_pencil`].
pub fn det_pencil_laplace(a: &Matrix, n: &Matrix) -> Result<Polynomial> {
    check_pair(a, n)?;
    if !a.is_square() {
        return Err(Error::NotSquare(a.nrows(), a.ncols()));
    }
    let size = a.nrows();
    let entries = pencil_entries(a, n);
    let rows: Vec<usize> = (0..size).collect();
    let cols: Vec<usize> = (0..size).collect();
    Ok(laplace(&entries, size, &rows, &cols, a.field()))
}

fn laplace(e: &[Polynomial], size: usize, rows: &[usize], cols: &[usize], field: crate::Field) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::constant(field.one());
    }
    let r = rows[0];
    let mut acc = Polynomial::zero(field);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &e[r * size + c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&laplace(e, size, &rows[1..], &rest, field));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// All maximal (`p x p`) minors of `A + tN`, rows chosen in lexicographic order.
pub fn maximal_minors(a: &Matrix, n: &Matrix) -> Result<Vec<Polynomial>> {
    check_pair(a, n)?;
    let (rows, cols) = a.dims();
    if rows < cols {
        return Err(Error::shape(format!("at least {cols} rows"), rows));
    }
    (0..rows).combinations(cols).map(|sel| det_pencil(&a.select_rows(&sel), &n.select_rows(&sel))).collect()
}

/// Monic gcd of all maximal minors of `A + tN`; zero iff they all vanish.
pub fn minor_gcd(a: &Matrix, n: &Matrix) -> Result<Polynomial> {
    let minors = maximal_minors(a, n)?;
    Ok(minors.iter().fold(Polynomial::zero(a.field()), |g, m| g.gcd(m)))
}

/// Decide whether every matrix of `A + tN` has full column rank.
///
/// Over GF(p) every `t` is tried directly; over the rationals the roots of
/// the minor gcd are found with the rational root theorem.
pub fn classify_line(a: &Matrix, n: &Matrix) -> Result<PencilAnalysis> {
    let g = minor_gcd(a, n)?;
    let p = a.ncols();
    let class = if g.is_zero() {
        LineClass::IdenticallyZero
    } else if a.field().is_finite() {
        let mut drop = None;
        for t in a.field().elements()? {
            if a.add_scaled(&t, n)?.rank() < p {
                drop = Some(t);
                break;
            }
        }
        match drop {
            Some(t) => LineClass::HasRoot(t),
            None if g.is_nonzero_constant() => LineClass::ConstantNonzero,
            None => LineClass::NonconstantRootFree,
        }
    } else {
        match rational_roots(&g)?.into_iter().next() {
            Some(t) => LineClass::HasRoot(t),
            None if g.is_nonzero_constant() => LineClass::ConstantNonzero,
            None => LineClass::NonconstantRootFree,
        }
    };
    let polynomial = if a.is_square() { det_pencil(a, n)? } else { g };
    Ok(PencilAnalysis { polynomial, class })
}
