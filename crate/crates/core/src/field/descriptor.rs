use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Field, PrimeField, Quadratic, Rationals};
use crate::error::{Error, Result};

/// Serializable description of a field.
///
/// JSON form: `{"kind":"rational"}`, `{"kind":"prime","p":5}` or
/// `{"kind":"quadratic","base":{...},"d":"-1"}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Rational,
    Prime { p: u64 },
    Quadratic { base: Box<FieldDescriptor>, d: String },
}

/// A field chosen at runtime.
#[derive(Clone, Debug)]
pub enum AnyField {
    Rational(Rationals),
    Prime(PrimeField),
    QuadraticRational(Quadratic<Rationals>),
    QuadraticPrime(Quadratic<PrimeField>),
}

/// Runs `$body` with `$f` bound to the concrete field inside an [`AnyField`].
#[macro_export]
macro_rules! with_field {
    ($any:expr, $f:ident => $body:expr) => {
        match $any {
            $crate::field::AnyField::Rational($f) => $body,
            $crate::field::AnyField::Prime($f) => $body,
            $crate::field::AnyField::QuadraticRational($f) => $body,
            $crate::field::AnyField::QuadraticPrime($f) => $body,
        }
    };
}

impl FieldDescriptor {
    pub fn rational() -> Self {
        Self::Rational
    }

    pub fn prime(p: u64) -> Self {
        Self::Prime { p }
    }

    pub fn quadratic(base: FieldDescriptor, d: impl Into<String>) -> Self {
        Self::Quadratic {
            base: Box::new(base),
            d: d.into(),
        }
    }

    /// Builds the field, rejecting characteristic 2.
    pub fn build(&self) -> Result<AnyField> {
        self.build_inner(false)
    }

    /// Builds the field, accepting GF(2).
    pub fn build_allowing_char2(&self) -> Result<AnyField> {
        self.build_inner(true)
    }

    fn build_inner(&self, allow_char2: bool) -> Result<AnyField> {
        let prime = |p: u64| {
            if allow_char2 {
                PrimeField::with_char2_allowed(p)
            } else {
                PrimeField::new(p)
            }
        };
        Ok(match self {
            Self::Rational => AnyField::Rational(Rationals),
            Self::Prime { p } => AnyField::Prime(prime(*p)?),
            Self::Quadratic { base, d } => match base.as_ref() {
                Self::Rational => {
                    let d = Rationals.parse(d)?;
                    AnyField::QuadraticRational(Quadratic::new(Rationals, d)?)
                }
                Self::Prime { p } => {
                    let base = PrimeField::new(*p)?;
                    let d = base.parse(d)?;
                    AnyField::QuadraticPrime(Quadratic::new(base, d)?)
                }
                Self::Quadratic { .. } => return Err(Error::NestedExtension),
            },
        })
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational => write!(f, "q"),
            Self::Prime { p } => write!(f, "gf{p}"),
            Self::Quadratic { base, d } => write!(f, "{base}(sqrt{d})"),
        }
    }
}

/// Accepts the short names used on the command line (`q`, `gf5`, `qi`,
/// `gf9`, `q(sqrt-3)`, `gf7(sqrt3)`) as well as a JSON descriptor.
impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            return Ok(serde_json::from_str(t)?);
        }
        let lower = t.to_ascii_lowercase();
        match lower.as_str() {
            "q" | "rational" | "rationals" => return Ok(Self::Rational),
            "qi" | "q(i)" => return Ok(Self::quadratic(Self::Rational, "-1")),
            "gf9" => return Ok(Self::quadratic(Self::prime(3), "2")),
            _ => {}
        }
        if let Some((base, rest)) = lower.split_once("(sqrt") {
            let d = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::UnknownField(s.to_string()))?;
            return Ok(Self::quadratic(base.parse()?, d.trim()));
        }
        if let Some(p) = lower.strip_prefix("gf") {
            let p = p.parse().map_err(|_| Error::UnknownField(s.to_string()))?;
            return Ok(Self::prime(p));
        }
        Err(Error::UnknownField(s.to_string()))
    }
}

impl AnyField {
    pub fn descriptor(&self) -> FieldDescriptor {
        with_field!(self, f => f.descriptor())
    }

    pub fn is_finite(&self) -> bool {
        with_field!(self, f => f.order().is_some())
    }
}
