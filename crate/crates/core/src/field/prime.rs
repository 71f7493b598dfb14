use rand::Rng;

use super::{canonical_root, Field, FieldDescriptor};
use crate::error::{Error, Result};

/// The prime field GF(p), elements stored as least nonnegative residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// GF(p) for an odd prime `p`.
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        Self::with_char2_allowed(p)
    }

    /// Like [`PrimeField::new`] but also accepts `p = 2`. Only the simplicity
    /// check is meaningful in characteristic 2.
    pub fn with_char2_allowed(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::ModulusTooLarge(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn pow_mod(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    // Tonelli-Shanks; caller guarantees p odd and a a nonzero residue.
    fn tonelli_shanks(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if self.pow_mod(a, (p - 1) / 2) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| self.pow_mod(z, (p - 1) / 2) == p - 1)?;
        let mut m = s;
        let mut c = self.pow_mod(z, q);
        let mut t = self.pow_mod(a, q);
        let mut r = self.pow_mod(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = t2 * t2 % p;
                i += 1;
            }
            let b = self.pow_mod(c, 1 << (m - i - 1));
            m = i;
            c = b * b % p;
            t = t * c % p;
            r = r * b % p;
        }
        Some(r)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow_mod(*a, self.p - 2))
        }
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn elements(&self) -> Result<Vec<u64>> {
        Ok((0..self.p).collect())
    }

    fn sqrt(&self, a: &u64) -> Option<u64> {
        if *a == 0 || self.p == 2 {
            return Some(*a);
        }
        self.tonelli_shanks(*a).map(|r| canonical_root(self, r))
    }

    fn is_canonical_sign(&self, r: &u64) -> bool {
        *r <= self.p - r || *r == 0
    }

    fn parse(&self, literal: &str) -> Result<u64> {
        let s = literal.trim();
        let err = |reason: &str| Error::ParseScalar {
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        let parse_int = |t: &str| -> Result<u64> {
            t.trim()
                .parse::<i64>()
                .map(|n| self.reduce(n))
                .map_err(|e| err(&e.to_string()))
        };
        match s.split_once('/') {
            Some((num, den)) => {
                let den = parse_int(den)?;
                let inv = self.inv(&den).ok_or_else(|| err("zero denominator"))?;
                Ok(self.mul(&parse_int(num)?, &inv))
            }
            None => parse_int(s),
        }
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime { p: self.p }
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rules() {
        assert!(matches!(PrimeField::new(2), Err(Error::CharacteristicTwo)));
        assert!(matches!(PrimeField::new(9), Err(Error::NotPrime(9))));
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(PrimeField::with_char2_allowed(2).is_ok());
    }

    #[test]
    fn arithmetic_mod_5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add(&1, &4), 0);
        assert_eq!(f.sub(&1, &4), 2);
        assert_eq!(f.inv(&2), Some(3));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 4);
    }

    #[test]
    fn sqrt_examples() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.sqrt(&4), Some(2));
        assert_eq!(f.sqrt(&2), None);
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.sqrt(&12), Some(5));
    }

    #[test]
    fn parse_literals() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("7").unwrap(), 2);
        assert_eq!(f.parse(" -1 ").unwrap(), 4);
        assert_eq!(f.parse("1/2").unwrap(), 3);
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("x").is_err());
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(PrimeField::new(3).unwrap().elements().unwrap(), vec![0, 1, 2]);
    }
}
