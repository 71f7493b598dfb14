use super::elimination::{kernel, rref, solve};
use super::matrix::{vector, Matrix};
use crate::error::{Error, Result};
use crate::field::Field;

/// A subspace of `F^n` stored by its reduced row-echelon basis.
///
/// The representation is canonical, so two subspaces are equal as sets iff
/// they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace<E> {
    ambient_dim: usize,
    basis: Matrix<E>,
    pivots: Vec<usize>,
}

impl<E: Clone + Eq> Subspace<E> {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::from_vec(0, ambient_dim, Vec::new()),
            pivots: Vec::new(),
        }
    }

    pub fn full<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Self::from_rows_unreduced(f, Matrix::identity(f, n))
    }

    pub fn span<F: Field<Elem = E>>(f: &F, n: usize, vectors: &[Vec<E>]) -> Self {
        let m = Matrix::from_rows(n, vectors.to_vec()).expect("vectors of the ambient length");
        Self::from_rows_unreduced(f, m)
    }

    /// The row space of `m`.
    pub fn from_rows_unreduced<F: Field<Elem = E>>(f: &F, m: Matrix<E>) -> Self {
        let n = m.ncols();
        let r = rref(f, &m);
        let rows = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Self {
            ambient_dim: n,
            basis: Matrix::from_rows(n, rows).expect("rectangular"),
            pivots: r.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<E>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// Remainder of `x` after elimination against the basis; zero iff `x` is
    /// a member.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, x: &[E]) -> Vec<E> {
        let mut v = x.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = f.neg(&v[p]);
            vector::axpy(f, &mut v, &c, self.basis.row(r));
        }
        v
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, x: &[E]) -> bool {
        assert_eq!(x.len(), self.ambient_dim);
        vector::is_zero(f, &self.reduce(f, x))
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.rows().all(|r| other.contains(f, r))
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Ok(Self::span(f, self.ambient_dim, &rows))
    }

    pub fn intersect<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let (k1, k2) = (self.dim(), other.dim());
        if k1 == 0 || k2 == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        // c1 B1 = c2 B2  <=>  [B1^T | -B2^T] (c1, c2) = 0
        let mut cols = self.basis_vectors();
        cols.extend(other.basis_vectors().iter().map(|v| vector::scale(f, &f.neg(&f.one()), v)));
        let system = Matrix::from_columns(self.ambient_dim, &cols);
        let ker = kernel(f, &system);
        let vectors: Vec<Vec<E>> = ker
            .basis_vectors()
            .iter()
            .map(|c| {
                let mut v = vector::zeros(f, self.ambient_dim);
                for (coef, row) in c[..k1].iter().zip(self.basis.rows()) {
                    vector::axpy(f, &mut v, coef, row);
                }
                v
            })
            .collect();
        Ok(Self::span(f, self.ambient_dim, &vectors))
    }

    /// A complement `C` of `self` inside `u`: `C ⊆ u`, `C ∩ self = 0` and
    /// `self + C = self + u`. Chosen greedily from `u`'s canonical basis.
    pub fn complement_in<F: Field<Elem = E>>(&self, f: &F, u: &Self) -> Result<Self> {
        self.check_ambient(u)?;
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for row in u.basis.rows() {
            if !acc.contains(f, row) {
                chosen.push(row.to_vec());
                acc = acc.sum(f, &Self::span(f, self.ambient_dim, &[row.to_vec()]))?;
            }
        }
        Ok(Self::span(f, self.ambient_dim, &chosen))
    }

    /// Whether `ambient = self ⊕ other`.
    pub fn is_direct_sum<F: Field<Elem = E>>(
        &self,
        f: &F,
        other: &Self,
        ambient: &Self,
    ) -> Result<bool> {
        self.check_ambient(other)?;
        self.check_ambient(ambient)?;
        if self.dim() + other.dim() != ambient.dim() {
            return Ok(false);
        }
        Ok(self.intersect(f, other)?.is_zero() && self.sum(f, other)? == *ambient)
    }

    /// Splits `x = a + b` with `a ∈ self`, `b ∈ other`, assuming a direct sum
    /// containing `x`.
    pub fn split<F: Field<Elem = E>>(&self, f: &F, other: &Self, x: &[E]) -> Option<(Vec<E>, Vec<E>)> {
        let mut cols = self.basis_vectors();
        cols.extend(other.basis_vectors());
        if cols.is_empty() {
            return vector::is_zero(f, x).then(|| (x.to_vec(), x.to_vec()));
        }
        let system = Matrix::from_columns(self.ambient_dim, &cols);
        let c = solve(f, &system, x)?;
        let mut a = vector::zeros(f, self.ambient_dim);
        for (coef, row) in c[..self.dim()].iter().zip(self.basis.rows()) {
            vector::axpy(f, &mut a, coef, row);
        }
        let b = vector::sub(f, x, &a);
        Some((a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, PrimeField, Quadratic, Rationals};
    use crate::linalg::matrix::vector::unit;

    #[test]
    fn lattice_examples() {
        let q = Rationals;
        let e = |i| unit(&q, 3, i);
        let w = Subspace::span(&q, 3, &[e(0)]);
        let full = Subspace::full(&q, 3);
        assert_eq!(w.complement_in(&q, &full).unwrap(), Subspace::span(&q, 3, &[e(1), e(2)]));
        let a = Subspace::span(&q, 3, &[e(0), e(1)]);
        let b = Subspace::span(&q, 3, &[e(1), e(2)]);
        assert_eq!(a.intersect(&q, &b).unwrap(), Subspace::span(&q, 3, &[e(1)]));
        assert_eq!(a.sum(&q, &b).unwrap(), full);
        assert!(!a.is_direct_sum(&q, &b, &full).unwrap());
        assert!(Subspace::zero(2).intersect(&q, &Subspace::full(&q, 3)).is_err());
    }

    #[test]
    fn isotropic_line_direct_sum() {
        let f = Quadratic::new(Rationals, Rationals.from_i64(-1)).unwrap();
        let i = f.generator();
        let w1 = Subspace::span(&f, 2, &[vec![f.one(), i]]);
        let w2 = Subspace::span(&f, 2, &[unit(&f, 2, 1)]);
        assert!(w1.is_direct_sum(&f, &w2, &Subspace::full(&f, 2)).unwrap());
    }

    #[test]
    fn canonical_form_is_set_equality() {
        let f = PrimeField::new(5).unwrap();
        let a = Subspace::span(&f, 3, &[vec![1, 2, 3], vec![0, 1, 1]]);
        let b = Subspace::span(&f, 3, &[vec![1, 3, 4], vec![2, 4, 1]]);
        assert_eq!(a, b);
        assert!(a.contains(&f, &[1, 3, 4]));
        assert!(!a.contains(&f, &[0, 0, 1]));
    }

    #[test]
    fn split_recovers_components() {
        let f = PrimeField::new(5).unwrap();
        let a = Subspace::span(&f, 2, &[vec![1, 2]]);
        let b = Subspace::span(&f, 2, &[vec![0, 1]]);
        let (x, y) = a.split(&f, &b, &[3, 3]).unwrap();
        assert_eq!(x, vec![3, 1]);
        assert_eq!(y, vec![0, 2]);
    }
}
