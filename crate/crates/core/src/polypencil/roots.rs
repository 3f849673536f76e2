use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::exactalg::{root_order_key, Field, Scalar};

/// Positive divisors of `n != 0`, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Integer coefficients of the primitive multiple of `g` (content 1).
pub(crate) fn primitive_integer_form(g: &Polynomial) -> Vec<BigInt> {
    let rats: Vec<&BigRational> = g.coeffs().iter().map(|c| c.as_rational().expect("rational polynomial")).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// All rational roots of a nonzero rational polynomial, ordered by
/// `|num| + |den|`, non-negative first, then `|num|`.
///
/// Candidates come from the rational root theorem on the primitive integer
/// form and each one is confirmed by evaluation.
pub fn rational_roots(g: &Polynomial) -> Result<Vec<Scalar>> {
    if g.field() != Field::Rational {
        return Err(Error::FieldMismatch(Field::Rational, g.field()));
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ints = primitive_integer_form(g);
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Field::Rational.zero());
    }
    let constant = &ints[low];
    let leading = ints.last().unwrap();
    if low + 1 < ints.len() {
        let dens = divisors(leading);
        for num in divisors(constant) {
            for den in &dens {
                for sign in [1, -1] {
                    let cand = BigRational::new(&num * sign, den.clone());
                    if cand.denom() != den {
                        // reducible; the reduced form is visited separately
                        continue;
                    }
                    let s = Field::Rational.from_rational(cand).unwrap();
                    if g.eval(&s).is_zero() && !roots.contains(&s) {
                        roots.push(s);
                    }
                }
            }
        }
    }
    roots.sort_by_key(root_order_key);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn examples() {
        let r = rational_roots(&Polynomial::from_i64(q(), &[-1, 0, 1])).unwrap();
        assert_eq!(r, vec![q().from_i64(1), q().from_i64(-1)]);
        assert!(rational_roots(&Polynomial::from_i64(q(), &[1, 0, 1])).unwrap().is_empty());
        let r = rational_roots(&Polynomial::from_i64(q(), &[-3, 2])).unwrap();
        assert_eq!(r, vec![q().from_ratio(3, 2)]);
        assert_eq!(rational_roots(&Polynomial::zero(q())), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn zero_root_and_fraction_coefficients() {
        // t^2 * (t/2 - 1/3) has roots 0 and 2/3
        let g = Polynomial::new(q(), vec![q().zero(), q().zero(), q().from_ratio(-1, 3), q().from_ratio(1, 2)]);
        assert_eq!(rational_roots(&g).unwrap(), vec![q().zero(), q().from_ratio(2, 3)]);
        // constants have no roots
        assert!(rational_roots(&Polynomial::from_i64(q(), &[5])).unwrap().is_empty());
    }

    #[test]
    fn ordering_is_deterministic() {
        // (t - 2)(t - 1/2)(t + 1) = t^3 - 3/2 t^2 - 3/2 t + 1 -> scale by 2
        let g = Polynomial::from_i64(q(), &[2, -3, -3, 2]);
        let r = rational_roots(&g).unwrap();
        assert_eq!(r, vec![q().from_i64(-1), q().from_ratio(1, 2), q().from_i64(2)]);
    }
}
