//! Two-sided ideals and simplicity over finite fields.

use rayon::prelude::*;

use super::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::finite::{check_cap, projective_points, SearchConfig};
use crate::linalg::Subspace;

/// A subspace closed under left and right multiplication by the algebra.
#[derive(Clone, Debug)]
pub struct Ideal<'a, F: Field> {
    algebra: &'a Algebra<F>,
    space: Subspace<F::Elem>,
}

impl<'a, F: Field> Ideal<'a, F> {
    /// Checks closure before wrapping `space`.
    pub fn new(algebra: &'a Algebra<F>, space: Subspace<F::Elem>) -> Result<Self> {
        if space.ambient_dim() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} in an algebra of dimension {}",
                space.ambient_dim(),
                algebra.dim()
            )));
        }
        let f = algebra.field();
        for v in space.basis_vectors() {
            for i in 0..algebra.dim() {
                if !space.contains(f, &algebra.left_basis_mul(i, &v)) || !space.contains(f, &algebra.right_basis_mul(&v, i)) {
                    return Err(Error::InvalidArgument(format!("subspace is not closed under e_{}", i + 1)));
                }
            }
        }
        Ok(Self { algebra, space })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        self.algebra
    }

    pub fn space(&self) -> &Subspace<F::Elem> {
        &self.space
    }

    pub fn into_space(self) -> Subspace<F::Elem> {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_proper(&self) -> bool {
        !self.space.is_zero() && !self.space.is_full()
    }
}

/// Smallest two-sided ideal containing `seed`.
pub fn ideal_closure<'a, F: Field>(a: &'a Algebra<F>, seed: &Subspace<F::Elem>) -> Result<Ideal<'a, F>> {
    if seed.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "seed in F^{}, algebra of dimension {}",
            seed.ambient_dim(),
            a.dim()
        )));
    }
    let f = a.field();
    let n = a.dim();
    let mut vectors = seed.basis_vectors();
    let mut span = seed.clone();
    let mut next = 0;
    while next < vectors.len() && !span.is_full() {
        let v = vectors[next].clone();
        next += 1;
        for i in 0..n {
            for w in [a.left_basis_mul(i, &v), a.right_basis_mul(&v, i)] {
                if !span.contains(f, &w) {
                    vectors.push(w);
                    span = Subspace::span(f, n, &vectors);
                }
            }
        }
    }
    Ok(Ideal { algebra: a, space: span })
}

/// Outcome of [`is_simple_finite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplicity<E> {
    pub simple: bool,
    /// `A·A = 0`, which alone rules out simplicity.
    pub zero_product: bool,
    /// A proper nonzero ideal, when one exists.
    pub witness: Option<Subspace<E>>,
}

/// Decides simplicity of an algebra over a finite field by closing every
/// line `Span{x}` to an ideal. An algebra with zero product is not simple.
pub fn is_simple_finite<F: Field>(a: &Algebra<F>, config: &SearchConfig) -> Result<Simplicity<F::Elem>> {
    let f = a.field();
    let q = f
        .order()
        .ok_or_else(|| Error::InfiniteField(format!("simplicity over {}", f.name())))?;
    check_cap(q, a.dim(), config.cap)?;
    let zero_product = a.has_zero_product();
    let points = projective_points(f, a.dim(), config.cap)?;
    let witness = config.run(|| {
        points.par_iter().find_map_first(|x| {
            let line = Subspace::span(f, a.dim(), std::slice::from_ref(x));
            let closure = ideal_closure(a, &line).expect("matching dimension");
            (!closure.space().is_full()).then(|| closure.into_space())
        })
    })?;
    Ok(Simplicity {
        simple: !zero_product && witness.is_none(),
        zero_product,
        witness,
    })
}
