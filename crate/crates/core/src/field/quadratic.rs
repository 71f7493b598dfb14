use rand::Rng;

use super::{canonical_root, Field, FieldDescriptor};
use crate::error::{Error, Result};

/// `re + im·r` where `r² = d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadElem<E> {
    pub re: E,
    pub im: E,
}

impl<E> QuadElem<E> {
    pub fn new(re: E, im: E) -> Self {
        Self { re, im }
    }
}

/// The quadratic extension `base(√d)` for a non-square `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic<B: Field> {
    base: B,
    d: B::Elem,
}

impl<B: Field> Quadratic<B> {
    /// Rejects characteristic 2 and square `d` (the root is reported).
    pub fn new(base: B, d: B::Elem) -> Result<Self> {
        if base.characteristic() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if let Some(root) = base.sqrt(&d) {
            return Err(Error::SquareParameter {
                d: base.format(&d),
                root: base.format(&root),
            });
        }
        Ok(Self { base, d })
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn parameter(&self) -> &B::Elem {
        &self.d
    }

    pub fn embed(&self, a: B::Elem) -> QuadElem<B::Elem> {
        QuadElem::new(a, self.base.zero())
    }

    /// The adjoined root `r`.
    pub fn generator(&self) -> QuadElem<B::Elem> {
        QuadElem::new(self.base.zero(), self.base.one())
    }

    pub fn norm(&self, a: &QuadElem<B::Elem>) -> B::Elem {
        let b = &self.base;
        b.sub(&b.mul(&a.re, &a.re), &b.mul(&self.d, &b.mul(&a.im, &a.im)))
    }

    fn sqrt_uncanonical(&self, a: &QuadElem<B::Elem>) -> Option<QuadElem<B::Elem>> {
        let b = &self.base;
        if b.is_zero(&a.im) {
            if let Some(x) = b.sqrt(&a.re) {
                return Some(self.embed(x));
            }
            // (y r)^2 = d y^2
            let y = b.sqrt(&b.div(&a.re, &self.d)?)?;
            return Some(QuadElem::new(b.zero(), y));
        }
        // (x + y r)^2 = a + c r  <=>  x^2 + d y^2 = a, 2xy = c.
        // Then x^2 = (a ± s)/2 where s^2 = a^2 - d c^2 is the norm.
        let s = b.sqrt(&self.norm(a))?;
        let half = b.half().ok()?;
        for t in [s.clone(), b.neg(&s)] {
            let x2 = b.mul(&b.add(&a.re, &t), &half);
            if let Some(x) = b.sqrt(&x2) {
                if b.is_zero(&x) {
                    continue;
                }
                let y = b.div(&b.mul(&a.im, &half), &x)?;
                return Some(QuadElem::new(x, y));
            }
        }
        None
    }
}

impl<B: Field> Field for Quadratic<B> {
    type Elem = QuadElem<B::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(self.base.from_i64(n))
    }

    fn add(&self, a: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        QuadElem::new(self.base.add(&a.re, &c.re), self.base.add(&a.im, &c.im))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        QuadElem::new(self.base.neg(&a.re), self.base.neg(&a.im))
    }

    fn sub(&self, a: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        QuadElem::new(self.base.sub(&a.re, &c.re), self.base.sub(&a.im, &c.im))
    }

    fn mul(&self, a: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        let b = &self.base;
        let re = b.add(&b.mul(&a.re, &c.re), &b.mul(&self.d, &b.mul(&a.im, &c.im)));
        let im = b.add(&b.mul(&a.re, &c.im), &b.mul(&a.im, &c.re));
        QuadElem::new(re, im)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let n = self.base.inv(&self.norm(a))?;
        Some(QuadElem::new(
            self.base.mul(&a.re, &n),
            self.base.neg(&self.base.mul(&a.im, &n)),
        ))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.re) && self.base.is_zero(&a.im)
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn order(&self) -> Option<u64> {
        self.base.order().and_then(|q| q.checked_mul(q))
    }

    fn elements(&self) -> Result<Vec<Self::Elem>> {
        let base = self.base.elements().map_err(|_| Error::InfiniteField(self.name()))?;
        let mut out = Vec::with_capacity(base.len() * base.len());
        for re in &base {
            for im in &base {
                out.push(QuadElem::new(re.clone(), im.clone()));
            }
        }
        Ok(out)
    }

    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.sqrt_uncanonical(a).map(|r| canonical_root(self, r))
    }

    fn is_canonical_sign(&self, r: &Self::Elem) -> bool {
        if self.base.is_zero(&r.re) {
            self.base.is_canonical_sign(&r.im)
        } else {
            self.base.is_canonical_sign(&r.re)
        }
    }

    fn parse(&self, literal: &str) -> Result<Self::Elem> {
        let err = |reason: &str| Error::ParseScalar {
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty literal"));
        }
        // Split into signed terms; a sign only starts a term when it does not
        // follow '/', '*' or another sign.
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for (i, &c) in bytes.iter().enumerate() {
            if i > start && (c == b'+' || c == b'-') {
                let prev = bytes[i - 1];
                if prev != b'/' && prev != b'*' && prev != b'+' && prev != b'-' {
                    terms.push(&s[start..i]);
                    start = i;
                }
            }
        }
        terms.push(&s[start..]);

        let mut acc = self.zero();
        for term in terms {
            let term = term.strip_prefix('+').unwrap_or(term);
            let value = if let Some(coef) = term.strip_suffix('r') {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let c = match coef {
                    "" => self.base.one(),
                    "-" => self.base.neg(&self.base.one()),
                    _ => self.base.parse(coef).map_err(|_| err("bad coefficient of r"))?,
                };
                QuadElem::new(self.base.zero(), c)
            } else {
                if term.is_empty() {
                    return Err(err("empty term"));
                }
                self.embed(self.base.parse(term).map_err(|_| err("bad rational/residue part"))?)
            };
            acc = self.add(&acc, &value);
        }
        Ok(acc)
    }

    fn format(&self, a: &Self::Elem) -> String {
        let b = &self.base;
        if b.is_zero(&a.im) {
            return b.format(&a.re);
        }
        let im = if b.is_one(&a.im) {
            "r".to_string()
        } else {
            format!("{}*r", b.format(&a.im))
        };
        if b.is_zero(&a.re) {
            im
        } else if im.starts_with('-') {
            format!("{}{}", b.format(&a.re), im)
        } else {
            format!("{}+{}", b.format(&a.re), im)
        }
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Quadratic {
            base: Box::new(self.base.descriptor()),
            d: self.base.format(&self.d),
        }
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        QuadElem::new(self.base.random(rng), self.base.random(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qi() -> Quadratic<Rationals> {
        Quadratic::new(Rationals, Rationals.from_i64(-1)).unwrap()
    }

    #[test]
    fn gaussian_rationals() {
        let f = qi();
        let i = f.generator();
        assert_eq!(f.mul(&i, &i), f.from_i64(-1));
        assert_eq!(f.sqrt(&f.from_i64(-1)), Some(i.clone()));
        let x = f.parse("1/2-3*r").unwrap();
        assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
        assert_eq!(f.format(&x), "1/2-3*r");
        assert_eq!(f.parse("-r").unwrap(), f.neg(&i));
        assert_eq!(f.parse("2r+1").unwrap(), f.parse("1+2*r").unwrap());
    }

    #[test]
    fn square_parameters_are_rejected() {
        let gf5 = PrimeField::new(5).unwrap();
        assert!(Quadratic::new(gf5, 2).is_ok());
        match Quadratic::new(gf5, 4) {
            Err(Error::SquareParameter { root, .. }) => assert_eq!(root, "2"),
            other => panic!("expected rejection, got {other:?}"),
        }
        // 4 being a square is confirmed by exhaustion
        assert!((0..5u64).any(|x| x * x % 5 == 4));
        assert!(!(0..5u64).any(|x| x * x % 5 == 2));
    }

    #[test]
    fn gf9_has_nine_elements() {
        let f = Quadratic::new(PrimeField::new(3).unwrap(), 2).unwrap();
        let els = f.elements().unwrap();
        assert_eq!(els.len(), 9);
        let mut sorted = els.clone();
        sorted.sort();
        assert_eq!(els, sorted);
        assert!(Quadratic::new(Rationals, Rationals.from_i64(2)).unwrap().elements().is_err());
    }

    #[test]
    fn rational_extension_roots() {
        let f = Quadratic::new(Rationals, Rationals.from_i64(-1)).unwrap();
        // (1 + i)^2 = 2i
        let r = f.sqrt(&f.parse("2*r").unwrap()).unwrap();
        assert_eq!(f.mul(&r, &r), f.parse("2*r").unwrap());
        assert_eq!(r, f.parse("1+r").unwrap());
        // -3 = (√-1·√3)^2 has no root in Q(i)
        assert_eq!(f.sqrt(&f.from_i64(-3)), None);
        let g = Quadratic::new(Rationals, Rationals.from_i64(-3)).unwrap();
        // (2 - n) = -1 for n = 3 and -2 for n = 4: -3 is d, -12 = d·4
        assert_eq!(g.sqrt(&g.from_i64(-12)), Some(g.parse("2*r").unwrap()));
    }
}
