//! Dense exact linear algebra over any [`Field`](crate::field::Field).

mod elimination;
pub mod forms;
mod matrix;
mod subspace;

pub use elimination::{inverse, is_invertible, kernel, rank, rref, solve, Rref};
pub use forms::{form_ext, form_j, gram, is_lagrangian, is_orthogonal, is_skew_symmetric};
pub use matrix::{vector, Matrix};
pub use subspace::Subspace;
