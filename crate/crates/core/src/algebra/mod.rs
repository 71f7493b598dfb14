//! Finite-dimensional algebras given by structure constants.

pub mod builders;
pub mod identities;
pub mod ideals;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{vector, Matrix, Subspace};
use crate::report::Check;

/// An algebra with basis `e_1, ..., e_n` and product
/// `e_i e_j = Σ_k c_{ij}^k e_k`.
///
/// Indices are 0-based in the Rust API and 1-based in JSON and witnesses.
#[derive(Clone, Debug)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    table: BTreeMap<(usize, usize, usize), F::Elem>,
    products: Vec<Vec<F::Elem>>,
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other)
    }
}

impl<F: Field> Algebra<F> {
    /// Builds the algebra from basis products: `product(i, j)` is the
    /// coordinate vector of `e_i e_j`.
    pub fn from_fn(field: F, dim: usize, mut product: impl FnMut(usize, usize) -> Vec<F::Elem>) -> Self {
        let mut products = Vec::with_capacity(dim * dim);
        let mut table = BTreeMap::new();
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                assert_eq!(p.len(), dim, "product e_{i}e_{j} has wrong length");
                for (k, c) in p.iter().enumerate() {
                    if !field.is_zero(c) {
                        table.insert((i, j, k), c.clone());
                    }
                }
                products.push(p);
            }
        }
        Self {
            field,
            dim,
            table,
            products,
        }
    }

    /// Builds the algebra from sparse 1-based `(i, j, k, c)` quadruples.
    /// Zero coefficients are dropped; repeated `(i, j, k)` is an error.
    pub fn from_table(
        field: F,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, F::Elem)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidTable("dimension must be at least 1".into()));
        }
        let mut products = vec![vec![field.zero(); dim]; dim * dim];
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, c) in entries {
            if !(1..=dim).contains(&i) || !(1..=dim).contains(&j) || !(1..=dim).contains(&k) {
                return Err(Error::InvalidTable(format!("index ({i}, {j}, {k}) outside 1..={dim}")));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::InvalidTable(format!("duplicate entry ({i}, {j}, {k})")));
            }
            products[(i - 1) * dim + (j - 1)][k - 1] = c;
        }
        Ok(Self::from_fn(field, dim, |i, j| products[i * dim + j].clone()))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero structure constants, 0-based, in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F::Elem)> {
        self.table.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn nonzero_constants(&self) -> usize {
        self.table.len()
    }

    pub fn same_table(&self, other: &Self) -> bool {
        self.dim == other.dim && self.table == other.table
    }

    /// Coordinates of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.products[i * self.dim + j]
    }

    pub fn unit(&self, i: usize) -> Vec<F::Elem> {
        vector::unit(&self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vector::zeros(&self.field, self.dim)
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                vector::axpy(f, &mut out, &f.mul(xi, yj), self.product(i, j));
            }
        }
        out
    }

    /// `e_i · y`.
    pub fn left_basis_mul(&self, i: usize, y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (j, yj) in y.iter().enumerate() {
            vector::axpy(f, &mut out, yj, self.product(i, j));
        }
        out
    }

    /// `x · e_j`.
    pub fn right_basis_mul(&self, x: &[F::Elem], j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            vector::axpy(f, &mut out, xi, self.product(i, j));
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_multiplication(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.right_basis_mul(x, j)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `x ↦ x y`.
    pub fn right_multiplication(&self, y: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<_> = (0..self.dim).map(|i| self.left_basis_mul(i, y)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// The same algebra in the basis `e'_a = e_{perm[a]}`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.dim;
        let mut inv = vec![usize::MAX; n];
        if perm.len() != n {
            return Err(Error::DimensionMismatch(format!("permutation of length {}", perm.len())));
        }
        for (a, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
            inv[p] = a;
        }
        let f = &self.field;
        Ok(Self::from_fn(f.clone(), n, |a, b| {
            let old = self.product(perm[a], perm[b]);
            let mut out = vector::zeros(f, n);
            for (k, c) in old.iter().enumerate() {
                out[inv[k]] = c.clone();
            }
            out
        }))
    }

    /// The subalgebra spanned by the listed basis elements, in that order.
    /// Errors when some product leaves the span.
    pub fn restricted(&self, indices: &[usize]) -> Result<Self> {
        let f = &self.field;
        let m = indices.len();
        let mut position = vec![None; self.dim];
        for (a, &i) in indices.iter().enumerate() {
            position[i] = Some(a);
        }
        let mut failure = None;
        let sub = Self::from_fn(f.clone(), m, |a, b| {
            let mut out = vector::zeros(f, m);
            for (k, c) in self.product(indices[a], indices[b]).iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                match position[k] {
                    Some(pos) => out[pos] = c.clone(),
                    None => failure = Some((indices[a], indices[b], k)),
                }
            }
            out
        });
        match failure {
            Some((i, j, k)) => Err(Error::InvalidTable(format!(
                "e_{}e_{} has a component along e_{} outside the span",
                i + 1,
                j + 1,
                k + 1
            ))),
            None => Ok(sub),
        }
    }

    /// Closure of `w` under the product.
    pub fn is_subalgebra(&self, w: &Subspace<F::Elem>) -> Check {
        let basis = w.basis_vectors();
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                if !w.contains(&self.field, &self.multiply(x, y)) {
                    return Check::fail(
                        &[a, b],
                        format!(
                            "product of basis vectors {} and {} of the subspace leaves it",
                            a + 1,
                            b + 1
                        ),
                    );
                }
            }
        }
        Check::pass()
    }

    /// `A · A = 0`.
    pub fn has_zero_product(&self) -> bool {
        self.table.is_empty()
    }
}
