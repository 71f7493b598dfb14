//! Exact scalar fields.
//!
//! Three families are supported: the rationals, prime fields GF(p) with p odd,
//! and quadratic extensions K(√d) of either. Every element has a unique
//! canonical representation, so `==` on elements is field equality.
//!
//! Algorithms in this crate are generic over [`Field`]; the runtime-selected
//! [`AnyField`] and the [`with_field!`](crate::with_field) macro bridge JSON/CLI
//! field descriptors to the concrete types.

mod descriptor;
mod prime;
mod quadratic;
mod rational;

use std::fmt;
use std::hash::Hash;

use rand::Rng;

pub use descriptor::{AnyField, FieldDescriptor};
pub use prime::PrimeField;
pub use quadratic::{QuadElem, Quadratic};
pub use rational::Rationals;

use crate::error::{Error, Result};

/// A field with exact arithmetic.
///
/// The element order given by `Ord` is the canonical order: for finite fields
/// [`Field::elements`] yields elements in exactly this order.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|b| self.mul(a, &b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Zero for the rationals and their extensions.
    fn characteristic(&self) -> u64;

    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;

    /// All elements in canonical order. Errors on infinite fields.
    fn elements(&self) -> Result<Vec<Self::Elem>>;

    /// A square root of `a` when one exists, always the canonical one of the
    /// pair `{r, -r}` (see [`Field::is_canonical_sign`]).
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Whether `r` is the preferred representative of `{r, -r}`.
    ///
    /// Rationals prefer the nonnegative root, GF(p) the smaller residue, and
    /// quadratic extensions decide on the first nonzero component.
    fn is_canonical_sign(&self, r: &Self::Elem) -> bool;

    fn parse(&self, literal: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn descriptor(&self) -> FieldDescriptor;

    /// A random element. Rationals draw small numerators and denominators.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem
    where
        Self: Sized;

    fn half(&self) -> Result<Self::Elem> {
        self.inv(&self.from_i64(2)).ok_or(Error::CharacteristicTwo)
    }

    fn pow(&self, a: &Self::Elem, mut k: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn name(&self) -> String {
        self.descriptor().to_string()
    }
}

/// Canonical root selection shared by the implementations.
pub(crate) fn canonical_root<F: Field>(f: &F, r: F::Elem) -> F::Elem {
    if f.is_canonical_sign(&r) {
        r
    } else {
        f.neg(&r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_axioms_exhaustive<F: Field>(f: &F) {
        let els = f.elements().unwrap();
        for a in &els {
            assert_eq!(f.add(a, &f.neg(a)), f.zero());
            if !f.is_zero(a) {
                assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
            }
            for b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in &els {
                    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                }
            }
        }
    }

    #[test]
    fn axioms_hold_on_small_finite_fields() {
        field_axioms_exhaustive(&PrimeField::new(3).unwrap());
        field_axioms_exhaustive(&PrimeField::new(5).unwrap());
        field_axioms_exhaustive(&PrimeField::new(7).unwrap());
        let gf9 = Quadratic::new(PrimeField::new(3).unwrap(), 2).unwrap();
        field_axioms_exhaustive(&gf9);
        let gf25 = Quadratic::new(PrimeField::new(5).unwrap(), 2).unwrap();
        field_axioms_exhaustive(&gf25);
    }

    fn sqrt_matches_exhaustion<F: Field>(f: &F) {
        let els = f.elements().unwrap();
        for a in &els {
            let brute: Vec<_> = els.iter().filter(|r| f.mul(r, r) == *a).cloned().collect();
            match f.sqrt(a) {
                Some(r) => {
                    assert_eq!(f.mul(&r, &r), *a);
                    assert!(f.is_canonical_sign(&r));
                    assert!(brute.contains(&r));
                }
                None => assert!(brute.is_empty(), "missed root of {a:?}"),
            }
        }
    }

    #[test]
    fn sqrt_agrees_with_exhaustion() {
        for p in [3, 5, 7, 11, 13, 17] {
            sqrt_matches_exhaustion(&PrimeField::new(p).unwrap());
        }
        sqrt_matches_exhaustion(&Quadratic::new(PrimeField::new(3).unwrap(), 2).unwrap());
        sqrt_matches_exhaustion(&Quadratic::new(PrimeField::new(5).unwrap(), 2).unwrap());
        sqrt_matches_exhaustion(&Quadratic::new(PrimeField::new(7).unwrap(), 3).unwrap());
    }

    #[test]
    fn gf3_subfield_is_square_in_gf9() {
        let gf9 = Quadratic::new(PrimeField::new(3).unwrap(), 2).unwrap();
        for a in 0..3 {
            let x = QuadElem::new(a, 0);
            assert!(gf9.sqrt(&x).is_some(), "{a} has no root in GF(9)");
        }
    }

    #[test]
    fn pow_and_half() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.half().unwrap(), 3);
        assert_eq!(f.pow(&2, 4), 1);
        assert_eq!(f.pow(&2, 0), 1);
        let gf2 = PrimeField::with_char2_allowed(2).unwrap();
        assert!(gf2.half().is_err());
    }
}
