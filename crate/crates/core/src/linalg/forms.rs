//! The standard symmetric form on `J_n = Span{e_1, ..., e_{n-1}}`, its
//! extension to all of `I_n`, and the matrix predicates built on them.

use super::matrix::{vector, Matrix};
use super::subspace::Subspace;
use crate::field::Field;

/// `(a, b) = a_1 b_1 + ... + a_{n-1} b_{n-1}` on `(n-1)`-vectors.
pub fn form_j<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    vector::dot(f, a, b)
}

/// `(v + αe_n, u + βe_n)_ext = (v, u) + αβ` on full `n`-vectors.
pub fn form_ext<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
    vector::dot(f, x, y)
}

/// Gram matrix of the subspace basis under the extended form.
pub fn gram<F: Field>(f: &F, w: &Subspace<F::Elem>) -> Matrix<F::Elem> {
    let b = w.basis();
    b.mul(f, &b.transpose())
}

/// The extended form vanishes on `w`. Basis pairs suffice by bilinearity.
pub fn is_lagrangian<F: Field>(f: &F, w: &Subspace<F::Elem>) -> bool {
    let rows = w.basis_vectors();
    rows.iter()
        .enumerate()
        .all(|(i, a)| rows[i..].iter().all(|b| f.is_zero(&form_ext(f, a, b))))
}

/// First entry `(r, c)` where `M M^T` or `M^T M` differs from `E`.
pub fn orthogonality_defect<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<(usize, usize)> {
    if !m.is_square() {
        return Some((0, 0));
    }
    let id = Matrix::identity(f, m.nrows());
    let t = m.transpose();
    for prod in [m.mul(f, &t), t.mul(f, m)] {
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                if prod[(r, c)] != id[(r, c)] {
                    return Some((r, c));
                }
            }
        }
    }
    None
}

pub fn is_orthogonal<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    orthogonality_defect(f, m).is_none()
}

/// First entry `(r, c)` with `M[r,c] != -M[c,r]`.
pub fn skew_defect<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<(usize, usize)> {
    if !m.is_square() {
        return Some((0, 0));
    }
    for r in 0..m.nrows() {
        for c in r..m.ncols() {
            if m[(r, c)] != f.neg(&m[(c, r)]) {
                return Some((r, c));
            }
        }
    }
    None
}

pub fn is_skew_symmetric<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    skew_defect(f, m).is_none()
}

pub use super::elimination::is_invertible;
