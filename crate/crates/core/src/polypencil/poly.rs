use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Scalar};

/// Univariate polynomial in `t`, coefficients in ascending degree.
///
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and [`Polynomial::degree`] returns `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(field: Field) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `a + b t`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        Self::new(a.field(), vec![a, b])
    }

    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        assert!(coeffs.iter().all(|c| c.field() == field), "coefficient field mismatch");
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree 0 (nonzero constants); the zero polynomial is not constant here.
    pub fn is_nonzero_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field, other.field, "polynomial field mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.field, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.field, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(self.field, out)
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor);
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let lead_inv = divisor.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] * &lead_inv;
            let shift = k - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * d);
            }
            quot[shift] = c;
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(self.field, quot), Self::new(self.field, rem)))
    }

    /// Quotient of a division known to be exact. Panics otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    /// Scale to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Scalar) -> Scalar {
        assert_eq!(t.field(), self.field, "evaluation point field mismatch");
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * t) + c)
    }
}

/// Renders as `c0 + c1*t + c2*t^2 + ...`, omitting zero terms; `0` for zero.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_degrees() {
        let f = Field::gf2();
        assert_eq!(Polynomial::from_i64(f, &[1, 0, 2]).degree(), Some(0));
        assert_eq!(Polynomial::zero(f).degree(), None);
        assert_eq!(Polynomial::from_i64(f, &[0, 0]), Polynomial::zero(f));
    }

    #[test]
    fn eval_examples() {
        let f = Field::gf2();
        assert!(Polynomial::zero(f).eval(&f.one()).is_zero());
        let g = Polynomial::from_i64(f, &[1, 1, 1]);
        assert_eq!(g.eval(&f.one()), f.one());
        assert_eq!(g.eval(&f.zero()), f.one());
    }

    #[test]
    fn division_and_gcd() {
        let q = Field::Rational;
        let a = Polynomial::from_i64(q, &[-1, 0, 1]); // t^2 - 1
        let b = Polynomial::from_i64(q, &[2, 2]); // 2t + 2
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, Polynomial::new(q, vec![q.from_ratio(-1, 2), q.from_ratio(1, 2)]));
        assert_eq!(a.gcd(&b), Polynomial::from_i64(q, &[1, 1]));
        assert_eq!(a.gcd(&Polynomial::zero(q)), a);
        assert_eq!(Polynomial::zero(q).gcd(&Polynomial::zero(q)), Polynomial::zero(q));
        assert_eq!(a.div_rem(&Polynomial::zero(q)), Err(Error::ZeroPolynomial));
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
    }

    #[test]
    fn rendering() {
        let q = Field::Rational;
        assert_eq!(Polynomial::zero(q).to_string(), "0");
        assert_eq!(Polynomial::from_i64(q, &[-1]).to_string(), "-1");
        assert_eq!(Polynomial::from_i64(q, &[0, 1, 0, -3]).to_string(), "1*t + -3*t^3");
        assert_eq!(Polynomial::from_i64(Field::gf3(), &[2, 0, 1]).to_string(), "2 + 1*t^2");
    }
}
