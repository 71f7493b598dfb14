use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Field, FieldDescriptor};
use crate::error::{Error, Result};

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Result<Vec<BigRational>> {
        Err(Error::InfiniteField(self.name()))
    }

    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let num = exact_sqrt(a.numer())?;
        let den = exact_sqrt(a.denom())?;
        Some(BigRational::new(num, den))
    }

    fn is_canonical_sign(&self, r: &BigRational) -> bool {
        !r.is_negative()
    }

    fn parse(&self, literal: &str) -> Result<BigRational> {
        BigRational::from_str(literal.trim()).map_err(|e| Error::ParseScalar {
            literal: literal.to_string(),
            reason: e.to_string(),
        })
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let num: i64 = rng.random_range(-5..=5);
        let den: i64 = rng.random_range(1..=4);
        BigRational::new(num.into(), den.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_rationals() {
        let q = Rationals;
        assert_eq!(q.sqrt(&q.parse("-1").unwrap()), None);
        assert_eq!(q.sqrt(&q.parse("9/4").unwrap()), Some(q.parse("3/2").unwrap()));
        assert_eq!(q.sqrt(&q.parse("2").unwrap()), None);
        assert_eq!(q.sqrt(&q.zero()), Some(q.zero()));
    }

    #[test]
    fn parse_and_format() {
        let q = Rationals;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.format(&q.parse("4/2").unwrap()), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.elements().is_err());
    }
}
