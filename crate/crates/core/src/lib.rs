//! Exact computations with pre-Lie algebras: the simple algebras `I_n`,
//! their automorphisms and derivations, and Rota–Baxter operators on them.

mod error;

pub mod algebra;
pub mod api;
pub mod field;
pub mod finite;
pub mod linalg;
pub mod report;
pub mod rota_baxter;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
