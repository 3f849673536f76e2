//! Dense matrices over a [`Field`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, Scalar};
use super::modp;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Data {
    Mod(Vec<u32>),
    Rat(Vec<BigRational>),
}

/// A dense `rows x cols` matrix, row-major. Zero-sized dimensions are legal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Data,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// The four blocks `[[a, c], [b, d]]` of a square matrix split at `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    /// upper-left `r x r`
    pub a: Matrix,
    /// upper-right `r x (n-r)`
    pub c: Matrix,
    /// lower-left `(n-r) x r`
    pub b: Matrix,
    /// lower-right `(n-r) x (n-r)`
    pub d: Matrix,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        let data = match field {
            Field::Prime(_) => Data::Mod(vec![0; rows * cols]),
            Field::Rational => Data::Rat(vec![BigRational::zero(); rows * cols]),
        };
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, &field.one());
        }
        m
    }

    /// The matrix unit with a single 1 at `(i, j)` (zero-based).
    pub fn unit(field: Field, rows: usize, cols: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        m.set(i, j, &field.one());
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                m.set(i, j, &v);
            }
        }
        m
    }

    /// Build from integer rows; entries are reduced into the field.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(rows.iter().all(|r| r.as_ref().len() == cols), "ragged rows");
        Matrix::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i].as_ref()[j]))
    }

    pub fn from_scalars(field: Field, rows: usize, cols: usize, entries: &[Scalar]) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!("{} entries", rows * cols), entries.len()));
        }
        if let Some(s) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, s.field()));
        }
        Ok(Matrix::from_fn(field, rows, cols, |i, j| entries[i * cols + j].clone()))
    }

    pub(crate) fn from_raw_mod(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Matrix {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { field: Field::Prime(p), rows, cols, data: Data::Mod(data) }
    }

    pub(crate) fn raw_mod(&self) -> Option<&[u32]> {
        match &self.data {
            Data::Mod(v) => Some(v),
            Data::Rat(_) => None,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        let k = i * self.cols + j;
        match (&self.data, self.field) {
            (Data::Mod(v), Field::Prime(p)) => Scalar::modular(v[k], p),
            (Data::Rat(v), _) => Scalar::rational(v[k].clone()),
            _ => unreachable!(),
        }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, s: &Scalar) {
        assert_eq!(s.field(), self.field, "scalar field mismatch");
        let k = i * self.cols + j;
        match &mut self.data {
            Data::Mod(v) => v[k] = s.residue().unwrap(),
            Data::Rat(v) => v[k] = s.as_rational().unwrap().clone(),
        }
    }

    /// Copy with the entry at `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, s: &Scalar) -> Matrix {
        let mut m = self.clone();
        m.set(i, j, s);
        m
    }

    pub fn entries(&self) -> Vec<Scalar> {
        (0..self.rows).flat_map(|i| (0..self.cols).map(move |j| (i, j))).map(|(i, j)| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Mod(v) => v.iter().all(|&x| x == 0),
            Data::Rat(v) => v.iter().all(Zero::is_zero),
        }
    }

    fn check_same(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.dims() != other.dims() {
            return Err(Error::shape(dims_str(self.dims()), dims_str(other.dims())));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f_mod: impl Fn(u32, u32, u32) -> u32,
        f_rat: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<Matrix> {
        self.check_same(other)?;
        let data = match (&self.data, &other.data, self.field) {
            (Data::Mod(a), Data::Mod(b), Field::Prime(p)) => Data::Mod(a.iter().zip(b).map(|(&x, &y)| f_mod(x, y, p)).collect()),
            (Data::Rat(a), Data::Rat(b), _) => Data::Rat(a.iter().zip(b).map(|(x, y)| f_rat(x, y)).collect()),
            _ => unreachable!(),
        };
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b, p| (a + b) % p, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b, p| (a + p - b) % p, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        assert_eq!(s.field(), self.field, "scalar field mismatch");
        let data = match &self.data {
            Data::Mod(v) => {
                let (t, p) = (s.residue().unwrap() as u64, self.field.order().unwrap() as u64);
                Data::Mod(v.iter().map(|&x| (x as u64 * t % p) as u32).collect())
            }
            Data::Rat(v) => {
                let t = s.as_rational().unwrap();
                Data::Rat(v.iter().map(|x| x * t).collect())
            }
        };
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self + t * dir`, a point on the line through `self` directed by `dir`.
    pub fn add_scaled(&self, t: &Scalar, dir: &Matrix) -> Result<Matrix> {
        self.add(&dir.scale(t))
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-&self.field.one())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(Error::shape(format!("{} rows", self.cols), format!("{} rows", other.rows)));
        }
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let data = match (&self.data, &other.data, self.field) {
            (Data::Mod(a), Data::Mod(b), Field::Prime(p)) => {
                let mut out = vec![0u32; n * m];
                for i in 0..n {
                    for j in 0..m {
                        let s: u64 = (0..k).fold(0u64, |acc, l| (acc + a[i * k + l] as u64 * b[l * m + j] as u64) % p as u64);
                        out[i * m + j] = s as u32;
                    }
                }
                Data::Mod(out)
            }
            (Data::Rat(a), Data::Rat(b), _) => {
                let mut out = Vec::with_capacity(n * m);
                for i in 0..n {
                    for j in 0..m {
                        out.push((0..k).fold(BigRational::zero(), |acc, l| acc + &a[i * k + l] * &b[l * m + j]));
                    }
                }
                Data::Rat(out)
            }
            _ => unreachable!(),
        };
        Ok(Matrix { field: self.field, rows: n, cols: m, data })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let r: Vec<usize> = rows.collect();
        let c: Vec<usize> = cols.collect();
        self.select(&r, &c)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.select(rows, &cols)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.rows != other.rows {
            return Err(Error::shape(format!("{} rows", self.rows), format!("{} rows", other.rows)));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    /// Row space dimension.
    pub fn rank(&self) -> usize {
        match (&self.data, self.field) {
            (Data::Mod(v), Field::Prime(p)) => modp::rank_in_place(&mut v.clone(), self.rows, self.cols, p),
            (Data::Rat(v), _) => rat_rref(&mut v.clone(), self.rows, self.cols).len(),
            _ => unreachable!(),
        }
    }

    /// Reduced row-echelon form (leading ones, zero rows last).
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = match (&mut m.data, self.field) {
            (Data::Mod(v), Field::Prime(p)) => modp::rref_in_place(v, self.rows, self.cols, p),
            (Data::Rat(v), _) => rat_rref(v, self.rows, self.cols),
            _ => unreachable!(),
        };
        Rref { matrix: m, pivots }
    }

    /// Determinant; the empty matrix has determinant 1.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        Ok(match (&self.data, self.field) {
            (Data::Mod(v), Field::Prime(p)) => Scalar::modular(modp::det_in_place(&mut v.clone(), self.rows, p), p),
            (Data::Rat(v), _) => Scalar::rational(rat_det_bareiss(v, self.rows)),
            _ => unreachable!(),
        })
    }

    /// Columns spanning the right kernel, as a `cols x k` matrix.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (col, &f) in free.iter().enumerate() {
            k.set(f, col, &self.field.one());
            for (row, &pc) in pivots.iter().enumerate() {
                k.set(pc, col, &-&matrix.get(row, f));
            }
        }
        k
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n))?.rref();
        if aug.pivots.iter().filter(|&&c| c < n).count() < n {
            return Err(Error::Singular);
        }
        Ok(aug.matrix.submatrix(0..n, n..2 * n))
    }

    /// Transpose of the cofactor matrix, so that `M adj(M) = det(M) I`.
    pub fn adjugate(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut out = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.select(&rows, &cols).det()?;
                out.set(i, j, &if (i + j) % 2 == 0 { minor } else { -&minor });
            }
        }
        Ok(out)
    }

    /// Split a square matrix as `[[a, c], [b, d]]` with `a` of size `r x r`.
    pub fn block_decompose(&self, r: usize) -> Result<Blocks> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if r > n {
            return Err(Error::OutOfRange { what: "block split", value: r, allowed: format!("0..={n}") });
        }
        Ok(Blocks {
            a: self.submatrix(0..r, 0..r),
            c: self.submatrix(0..r, r..n),
            b: self.submatrix(r..n, 0..r),
            d: self.submatrix(r..n, r..n),
        })
    }

    /// Row-major flattening into a `1 x (rows*cols)` matrix.
    pub fn vectorize(&self) -> Matrix {
        Matrix { rows: 1, cols: self.rows * self.cols, ..self.clone() }
    }

    /// Inverse of [`Matrix::vectorize`] for row `row` of `vecs`.
    pub fn unvectorize(vecs: &Matrix, row: usize, rows: usize, cols: usize) -> Result<Matrix> {
        if vecs.cols != rows * cols {
            return Err(Error::shape(rows * cols, vecs.cols));
        }
        Ok(Matrix::from_fn(vecs.field, rows, cols, |i, j| vecs.get(row, i * cols + j)))
    }
}

/// `p * m * q` for invertible `p` and `q`.
pub fn equivalence_apply(p: &Matrix, m: &Matrix, q: &Matrix) -> Result<Matrix> {
    if !p.is_square() || p.rows != m.rows {
        return Err(Error::shape(format!("{0}x{0} left factor", m.rows), dims_str(p.dims())));
    }
    if !q.is_square() || q.rows != m.cols {
        return Err(Error::shape(format!("{0}x{0} right factor", m.cols), dims_str(q.dims())));
    }
    if p.det()?.is_zero() || q.det()?.is_zero() {
        return Err(Error::Singular);
    }
    p.mul(m)?.mul(q)
}

/// `[[I_r, 0], [0, 0]]` of size `n x p`.
pub fn canonical_n(field: Field, n: usize, p: usize, r: usize) -> Result<Matrix> {
    if r > n.min(p) {
        return Err(Error::OutOfRange { what: "rank", value: r, allowed: format!("0..={}", n.min(p)) });
    }
    let mut m = Matrix::zeros(field, n, p);
    for i in 0..r {
        m.set(i, i, &field.one());
    }
    Ok(m)
}

pub(crate) fn dims_str((r, c): (usize, usize)) -> String {
    format!("{r}x{c}")
}

fn rat_rref(v: &mut [BigRational], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !v[r * cols + c].is_zero()) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                v.swap(rank * cols + j, piv * cols + j);
            }
        }
        let inv = v[rank * cols + c].recip();
        for j in c..cols {
            v[rank * cols + j] *= &inv;
        }
        for r in 0..rows {
            if r == rank || v[r * cols + c].is_zero() {
                continue;
            }
            let f = v[r * cols + c].clone();
            for j in c..cols {
                let delta = &f * &v[rank * cols + j];
                v[r * cols + j] -= delta;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}

/// Bareiss elimination on the integer matrix obtained by clearing each row's
/// denominators; the row scalings are divided out at the end.
fn rat_det_bareiss(v: &[BigRational], n: usize) -> BigRational {
    let mut scale = BigInt::one();
    let mut m: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        let row = &v[i * n..(i + 1) * n];
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for x in row {
            m.push(x.numer() * (&l / x.denom()));
        }
        scale *= l;
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k * n + k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigRational::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, piv * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k * n + k] * &m[i * n + j] - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = num / &prev;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = m[k * n + k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { prev };
    BigRational::new(det * sign, scale)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
