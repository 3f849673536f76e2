//! Ground fields and their elements.
//!
//! Two kinds of field are supported: prime fields GF(p) with `p < 2^16`
//! and the rationals. Every [`Scalar`] is kept in canonical form, so
//! equality is structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MODULUS_LIMIT: u32 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    /// GF(p) for a prime `p`.
    Prime(u32),
    Rational,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// GF(p), checking primality by trial division.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= MODULUS_LIMIT as u64 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub const fn gf2() -> Field {
        Field::Prime(2)
    }

    pub const fn gf3() -> Field {
        Field::Prime(3)
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u32> {
        match self {
            Field::Prime(p) => Some(p),
            Field::Rational => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub(crate) fn require_finite(self) -> Result<u32> {
        self.order().ok_or(Error::InfiniteField(self))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::modular(v.rem_euclid(p as i64) as u32, p),
            Field::Rational => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// `num/den` in this field. Panics if `den` is zero (or divisible by `p`).
    pub fn from_ratio(self, num: i64, den: i64) -> Scalar {
        match self {
            Field::Prime(_) => &self.from_i64(num) / &self.from_i64(den),
            Field::Rational => Scalar(Repr::Rat(BigRational::new(num.into(), den.into()))),
        }
    }

    pub fn from_rational(self, q: BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar(Repr::Rat(q))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| -> u32 {
                    let r: BigInt = ((x % p) + p) % p;
                    u32::try_from(r).expect("reduced residue fits in u32")
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(Error::parse(0, format!("denominator divisible by {p}")));
                }
                Ok(&Scalar::modular(num, p) / &Scalar::modular(den, p))
            }
        }
    }

    /// All field elements in canonical order `0, 1, ..., p-1`.
    pub fn elements(self) -> Result<impl Iterator<Item = Scalar>> {
        let p = self.require_finite()?;
        Ok((0..p).map(move |v| Scalar::modular(v, p)))
    }

    /// Parse an entry: integers for GF(p) (reduced), `a` or `a/b` for rationals.
    pub fn parse_scalar(self, token: &str) -> Result<Scalar> {
        let bad = || Error::parse(0, format!("invalid entry `{token}` for field {self}"));
        let (num, den) = match token.split_once('/') {
            Some((a, b)) => (a.parse::<BigInt>().map_err(|_| bad())?, b.parse::<BigInt>().map_err(|_| bad())?),
            None => (token.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        self.from_rational(BigRational::new(num, den)).map_err(|_| bad())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "gf {p}"),
            Field::Rational => write!(f, "rat"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Mod { value: u32, modulus: u32 },
    Rat(BigRational),
}

/// An exact field element in canonical form.
///
/// Arithmetic between scalars of different fields is a programming error
/// and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    // Fermat: a^(p-2)
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u32;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub(crate) fn modular(value: u32, modulus: u32) -> Scalar {
        debug_assert!(value < modulus);
        Scalar(Repr::Mod { value, modulus })
    }

    pub(crate) fn rational(q: BigRational) -> Scalar {
        Scalar(Repr::Rat(q))
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Mod { modulus, .. } => Field::Prime(*modulus),
            Repr::Rat(_) => Field::Rational,
        }
    }

    /// Canonical representative in `[0, p)` for prime-field elements.
    pub fn residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Mod { value, .. } => Some(*value),
            Repr::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(q) => Some(q),
            Repr::Mod { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Mod { value, .. } => *value == 0,
            Repr::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Mod { value, .. } => *value == 1,
            Repr::Rat(q) => q.is_one(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Mod { value, modulus } => Scalar::modular(inv_mod(*value, *modulus), *modulus),
            Repr::Rat(q) => Scalar(Repr::Rat(q.recip())),
        })
    }

    fn binop(
        &self,
        rhs: &Scalar,
        modop: impl Fn(u64, u64, u64) -> u64,
        ratop: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                Scalar::modular(modop(*a as u64, *b as u64, *p as u64) as u32, *p)
            }
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(ratop(a, b))),
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Mod { value, .. } => write!(f, "{value}"),
            Repr::Rat(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Repr::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b, p| (a + b) % p, |a, b| a + b)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b, p| (a + p - b) % p, |a, b| a - b)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b, p| a * b % p, |a, b| a * b)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Mod { value, modulus } => Scalar::modular((modulus - value) % modulus, *modulus),
            Repr::Rat(q) => Scalar(Repr::Rat(-q)),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Ordering used when reporting roots: canonical residue for GF(p); for the
/// rationals by `|num| + |den|`, then non-negative before negative, then `|num|`.
pub(crate) fn root_order_key(s: &Scalar) -> (BigInt, bool, BigInt) {
    match &s.0 {
        Repr::Mod { value, .. } => (BigInt::from(*value), false, BigInt::zero()),
        Repr::Rat(q) => (q.numer().abs() + q.denom(), q.is_negative(), q.numer().abs()),
    }
}
