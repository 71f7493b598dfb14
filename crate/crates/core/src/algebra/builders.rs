//! Constructions of the algebras under study.

use std::fmt;
use std::str::FromStr;

use super::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::vector;

/// The simple pre-Lie algebra `I_n`:
/// `e_n e_n = 2e_n`, `e_n e_j = e_j`, `e_j e_j = e_n` for `j < n`, all other
/// products zero.
pub fn i_n<F: Field>(f: &F, n: usize) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(Error::InvalidArgument("I_n needs n >= 1".into()));
    }
    let last = n - 1;
    Ok(Algebra::from_fn(f.clone(), n, |i, j| {
        let mut out = vector::zeros(f, n);
        if i == last && j == last {
            out[last] = f.from_i64(2);
        } else if i == last {
            out[j] = f.one();
        } else if i == j {
            out[last] = f.one();
        }
        out
    }))
}

/// `u ∘ v = (u, v) a + (u, a) v` on `F^n` with the standard dot product.
pub fn dot_product_algebra<F: Field>(f: &F, n: usize, a: &[F::Elem]) -> Result<Algebra<F>> {
    if a.len() != n {
        return Err(Error::DimensionMismatch(format!("vector a has length {}, expected {n}", a.len())));
    }
    if vector::is_zero(f, a) {
        return Err(Error::ZeroVector);
    }
    Ok(Algebra::from_fn(f.clone(), n, |i, j| {
        let mut out = if i == j { a.to_vec() } else { vector::zeros(f, n) };
        out[j] = f.add(&out[j], &a[i]);
        out
    }))
}

/// Upper-triangular matrix units `e_{ab}` (`a <= b`, 0-based) in row-major
/// order.
pub fn upper_triangular_units(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect()
}

/// Upper-triangular `n x n` matrices under `x ∘ y = xy + τ(xy^T + yx^T)`,
/// where `τ` keeps the strictly upper part, halves the diagonal and drops
/// the strictly lower part.
///
/// Returns the algebra on the units of [`upper_triangular_units`] together
/// with the positions of the first-row units `e_{11}, ..., e_{1n}`.
pub fn upper_triangular_circ<F: Field>(f: &F, n: usize) -> Result<(Algebra<F>, Vec<usize>)> {
    if n == 0 {
        return Err(Error::InvalidArgument("need n >= 1".into()));
    }
    let half = f.half()?;
    let units = upper_triangular_units(n);
    let dim = units.len();
    let position = |a: usize, b: usize| units.iter().position(|&u| u == (a, b));
    let algebra = Algebra::from_fn(f.clone(), dim, |i, j| {
        let (a, b) = units[i];
        let (c, d) = units[j];
        let mut out = vector::zeros(f, dim);
        // e_ab e_cd
        if b == c {
            if let Some(k) = position(a, d) {
                out[k] = f.add(&out[k], &f.one());
            }
        }
        let mut add = |r: usize, s: usize, coef: F::Elem| {
            if r > s {
                return;
            }
            let coef = if r == s { f.mul(&coef, &half) } else { coef };
            let k = position(r, s).expect("upper unit");
            out[k] = f.add(&out[k], &coef);
        };
        // τ(e_ab e_dc + e_cd e_ba)
        if b == d {
            add(a, c, f.one());
            add(c, a, f.one());
        }
        out
    });
    let first_row = (0..n).map(|b| position(0, b).expect("first row")).collect();
    Ok((algebra, first_row))
}

/// The first row of [`upper_triangular_circ`] in the basis
/// `e_k = e_{1, n+1-k}`.
pub fn first_row_ideal<F: Field>(f: &F, n: usize) -> Result<Algebra<F>> {
    let (u, first_row) = upper_triangular_circ(f, n)?;
    let reversed: Vec<usize> = first_row.into_iter().rev().collect();
    u.restricted(&reversed)
}

/// Basis `e_0, ..., e_m` of the infinite-dimensional analogue of `I_n`:
/// `e_0 e_0 = 2e_0`, `e_0 e_j = e_j`, `e_j e_j = e_0`. Index 0 is `e_0`.
pub fn i_infinity_truncation<F: Field>(f: &F, m: usize) -> Algebra<F> {
    let dim = m + 1;
    Algebra::from_fn(f.clone(), dim, |i, j| {
        let mut out = vector::zeros(f, dim);
        if i == 0 && j == 0 {
            out[0] = f.from_i64(2);
        } else if i == 0 {
            out[j] = f.one();
        } else if i == j {
            out[0] = f.one();
        }
        out
    })
}

/// Basis permutation carrying [`i_infinity_truncation`]`(m)` onto
/// `I_{m+1}`: `e_0` goes to the last slot.
pub fn i_infinity_to_i_n_permutation(m: usize) -> Vec<usize> {
    (1..=m).chain(std::iter::once(0)).collect()
}

/// `a ∘ b = (ab + ba) / 2`.
pub fn plus_algebra<F: Field>(a: &Algebra<F>) -> Result<Algebra<F>> {
    let f = a.field();
    let half = f.half()?;
    Ok(Algebra::from_fn(f.clone(), a.dim(), |i, j| {
        vector::scale(f, &half, &vector::add(f, a.product(i, j), a.product(j, i)))
    }))
}

/// `[a, b] = ab - ba`.
pub fn minus_algebra<F: Field>(a: &Algebra<F>) -> Algebra<F> {
    let f = a.field();
    Algebra::from_fn(f.clone(), a.dim(), |i, j| vector::sub(f, a.product(i, j), a.product(j, i)))
}

/// `A^# = A ⊕ F·1` with the adjoined unit as the last basis element.
pub fn unital_extension<F: Field>(a: &Algebra<F>) -> Algebra<F> {
    let f = a.field();
    let n = a.dim();
    Algebra::from_fn(f.clone(), n + 1, |i, j| {
        if i == n {
            vector::unit(f, n + 1, j)
        } else if j == n {
            vector::unit(f, n + 1, i)
        } else {
            let mut out = a.product(i, j).to_vec();
            out.push(f.zero());
            out
        }
    })
}

/// Named families for the command line and JSON interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `I_n`
    In,
    /// `u ∘ v = (u, v) a + (u, a) v`; `a = e_n` unless given.
    DotProduct,
    /// upper-triangular matrices under the τ-twisted product
    UpperTriangular,
    /// truncation `e_0, ..., e_m` of the infinite-dimensional analogue
    IInfinity,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "in" => Ok(Self::In),
            "ex1" | "dot" => Ok(Self::DotProduct),
            "un" => Ok(Self::UpperTriangular),
            "iinf" => Ok(Self::IInfinity),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::In => "in",
            Self::DotProduct => "ex1",
            Self::UpperTriangular => "un",
            Self::IInfinity => "iinf",
        })
    }
}

/// Builds a family member. For [`Family::IInfinity`], `n` is the truncation
/// index `m`; for [`Family::DotProduct`], `a` defaults to `e_n`.
pub fn build<F: Field>(f: &F, family: Family, n: usize, a: Option<&[F::Elem]>) -> Result<Algebra<F>> {
    match family {
        Family::In => i_n(f, n),
        Family::DotProduct => match a {
            Some(a) => dot_product_algebra(f, n, a),
            None if n == 0 => Err(Error::InvalidArgument("need n >= 1".into())),
            None => dot_product_algebra(f, n, &vector::unit(f, n, n - 1)),
        },
        Family::UpperTriangular => upper_triangular_circ(f, n).map(|(a, _)| a),
        Family::IInfinity => Ok(i_infinity_truncation(f, n)),
    }
}
