//! Exact rationals over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("bad rational '{text}'"));
    match t.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| num_integer::Integer::lcm(&acc, v.denom()))
}

/// Scales a rational vector to the primitive integer vector pointing the
/// same way (coprime entries). The zero vector maps to itself.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(values);
    let ints: Vec<BigInt> = values.iter().map(|v| (v * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, v| num_integer::Integer::gcd(&acc, v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

pub fn is_positive(v: &Rational) -> bool {
    v.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn addition_matches_cross_multiplication() {
        for (a, b, c, d) in [(1i64, 3i64, 1i64, 6i64), (-5, 7, 2, 21), (3, 4, -3, 4), (10, 15, 4, 6)] {
            let lhs = Rational::new(a.into(), b.into()) + Rational::new(c.into(), d.into());
            let rhs = Rational::new((a * d + c * b).into(), (b * d).into());
            assert_eq!(lhs, rhs);
            assert_eq!(num_integer::Integer::gcd(lhs.numer(), lhs.denom()).abs(), if lhs.is_zero() { lhs.denom().clone() } else { BigInt::one() });
        }
    }

    #[test]
    fn primitive_vectors() {
        let v = [Rational::new(1.into(), 2.into()), int(1), Rational::new(3.into(), 2.into())];
        let p = primitive_integer_vector(&v);
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)]);
    }
}
