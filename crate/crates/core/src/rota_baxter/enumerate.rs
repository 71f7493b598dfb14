//! Exhaustive search for Rota–Baxter operators over finite fields.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{axiom_argument, is_rb, RbOperator};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::Field;
use crate::finite::{check_cap, vectors, MatrixSpace, SearchConfig};
use crate::linalg::{vector, Matrix};

/// Tests every `n x n` matrix against the axiom.
pub fn enumerate_rb_raw<F: Field>(
    a: &Algebra<F>,
    weight: &F::Elem,
    config: &SearchConfig,
) -> Result<Vec<RbOperator<F::Elem>>> {
    let n = a.dim();
    let space = MatrixSpace::new(a.field(), n, n, config.cap)?;
    config.run(|| {
        (0..space.len())
            .into_par_iter()
            .map(|idx| RbOperator {
                matrix: space.get(idx),
                weight: weight.clone(),
            })
            .filter(|r| is_rb(a, r).map(|c| c.holds).unwrap_or(false))
            .collect()
    })
}

struct Search<'a, F: Field> {
    a: &'a Algebra<F>,
    weight: &'a F::Elem,
    order: Vec<usize>,
    candidates: &'a [Vec<F::Elem>],
}

impl<F: Field> Search<'_, F> {
    /// Checks every pair that became decidable once `new` was assigned.
    fn consistent(&self, columns: &[Option<Vec<F::Elem>>], new: usize) -> bool {
        let f = self.a.field();
        let n = self.a.dim();
        let full: Vec<Vec<F::Elem>> = columns
            .iter()
            .map(|c| c.clone().unwrap_or_else(|| vector::zeros(f, n)))
            .collect();
        for i in 0..n {
            if columns[i].is_none() {
                continue;
            }
            for j in 0..n {
                if columns[j].is_none() {
                    continue;
                }
                let w = axiom_argument(self.a, &full, self.weight, i, j);
                let support_ready = w.iter().enumerate().all(|(k, c)| f.is_zero(c) || columns[k].is_some());
                let touches_new = i == new || j == new || !f.is_zero(&w[new]);
                if !support_ready || !touches_new {
                    continue;
                }
                let mut rhs = vector::zeros(f, n);
                for (k, c) in w.iter().enumerate() {
                    if !f.is_zero(c) {
                        vector::axpy(f, &mut rhs, c, &full[k]);
                    }
                }
                if self.a.multiply(&full[i], &full[j]) != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, depth: usize, columns: &mut Vec<Option<Vec<F::Elem>>>, out: &mut Vec<Matrix<F::Elem>>) {
        if depth == self.order.len() {
            let cols: Vec<Vec<F::Elem>> = columns.iter().map(|c| c.clone().expect("assigned")).collect();
            out.push(Matrix::from_columns(self.a.dim(), &cols));
            return;
        }
        let c = self.order[depth];
        for v in self.candidates {
            columns[c] = Some(v.clone());
            if self.consistent(columns, c) {
                self.extend(depth + 1, columns, out);
            }
        }
        columns[c] = None;
    }
}

/// Every RB operator of the given weight on a finite-field algebra, sorted
/// by matrix. Columns are assigned one at a time, starting with the basis
/// vector involved in the most products, and each basis pair is tested as
/// soon as every column it involves is fixed.
pub fn enumerate_rb_finite<F: Field>(
    a: &Algebra<F>,
    weight: &F::Elem,
    config: &SearchConfig,
) -> Result<Vec<RbOperator<F::Elem>>> {
    let f = a.field();
    let n = a.dim();
    let q = f.order().ok_or_else(|| crate::Error::InfiniteField(f.name()))?;
    check_cap(q, n * n, config.cap)?;
    let candidates = vectors(f, n, config.cap)?;
    let mut order: Vec<usize> = (0..n).collect();
    let involvement = |k: usize| (0..n).filter(|&j| !vector::is_zero(f, a.product(k, j)) || !vector::is_zero(f, a.product(j, k))).count();
    order.sort_by_key(|&k| std::cmp::Reverse(involvement(k)));
    let search = Search {
        a,
        weight,
        order,
        candidates: &candidates,
    };
    let first = search.order[0];
    let mut found: Vec<Matrix<F::Elem>> = config.run(|| {
        candidates
            .par_iter()
            .flat_map_iter(|v| {
                let mut columns = vec![None; n];
                columns[first] = Some(v.clone());
                let mut out = Vec::new();
                if search.consistent(&columns, first) {
                    search.extend(1, &mut columns, &mut out);
                }
                out
            })
            .collect()
    })?;
    found.sort();
    Ok(found
        .into_iter()
        .map(|matrix| RbOperator {
            matrix,
            weight: weight.clone(),
        })
        .collect())
}

/// The Rota–Baxter index of a finite set of operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RbIndex {
    Finite(usize),
    /// No `m ≤ dim²` works.
    Infinite,
}

impl fmt::Display for RbIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RbIndex::Finite(m) => write!(f, "{m}"),
            RbIndex::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for RbIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RbIndex::Finite(m) => s.serialize_u64(*m as u64),
            RbIndex::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Least `m` with `R^k (R + λE)^{m-k} = 0` for some `k ≤ m`, for `R`.
pub fn operator_index<F: Field>(f: &F, r: &RbOperator<F::Elem>, bound: usize) -> Option<usize> {
    let shifted = r.shifted(f);
    (1..=bound).find(|&m| (0..=m).any(|k| r.matrix.pow(f, k as u32).mul(f, &shifted.pow(f, (m - k) as u32)).is_zero(f)))
}

/// Least `m` that works for every operator in `ops` simultaneously.
pub fn rb_index_of<F: Field>(f: &F, ops: &[RbOperator<F::Elem>], dim: usize) -> RbIndex {
    let bound = dim * dim;
    let mut worst = 1;
    for r in ops {
        // a larger m also works: multiply by further factors
        match operator_index(f, r, bound) {
            Some(m) => worst = worst.max(m),
            None => return RbIndex::Infinite,
        }
    }
    RbIndex::Finite(worst)
}

/// The Rota–Baxter `λ`-index of a finite-field algebra, by enumeration.
pub fn rb_index_finite<F: Field>(a: &Algebra<F>, weight: &F::Elem, config: &SearchConfig) -> Result<RbIndex> {
    let ops = enumerate_rb_finite(a, weight, config)?;
    Ok(rb_index_of(a.field(), &ops, a.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders::{i_n, unital_extension};
    use crate::field::PrimeField;

    #[test]
    fn pruned_matches_raw() {
        let config = SearchConfig::default();
        for (n, p) in [(1, 3), (2, 3), (2, 5), (3, 3)] {
            let f = PrimeField::new(p).unwrap();
            let a = i_n(&f, n).unwrap();
            for lam in 0..p {
                let raw = enumerate_rb_raw(&a, &lam, &config).unwrap();
                let pruned = enumerate_rb_finite(&a, &lam, &config).unwrap();
                assert_eq!(raw, pruned, "n = {n}, p = {p}, λ = {lam}");
            }
        }
        let f = PrimeField::new(3).unwrap();
        let u = unital_extension(&i_n(&f, 2).unwrap());
        assert_eq!(
            enumerate_rb_raw(&u, &1, &config).unwrap(),
            enumerate_rb_finite(&u, &1, &config).unwrap()
        );
    }

    #[test]
    fn contents() {
        let config = SearchConfig::default();
        let f = PrimeField::new(3).unwrap();
        let a = i_n(&f, 2).unwrap();
        let zero = enumerate_rb_finite(&a, &0, &config).unwrap();
        assert!(zero.contains(&RbOperator::zero(&f, 2, 0)));
        for lam in 1..3 {
            let ops = enumerate_rb_finite(&a, &lam, &config).unwrap();
            assert!(ops.iter().all(|r| r.is_trivial(&f)));
            assert_eq!(ops.len(), 2);
        }
        let f5 = PrimeField::new(5).unwrap();
        let a5 = i_n(&f5, 2).unwrap();
        let ops = enumerate_rb_finite(&a5, &1, &config).unwrap();
        assert!(ops.iter().any(|r| !r.is_trivial(&f5)));
        for r in &ops {
            assert!(ops.binary_search(&r.phi(&f5)).is_ok());
        }
    }

    #[test]
    fn indices() {
        let config = SearchConfig::default();
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(rb_index_finite(&i_n(&f5, 2).unwrap(), &1, &config).unwrap(), RbIndex::Finite(2));
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(rb_index_finite(&i_n(&f3, 2).unwrap(), &1, &config).unwrap(), RbIndex::Finite(1));
        assert_eq!(rb_index_finite(&i_n(&f3, 1).unwrap(), &0, &config).unwrap(), RbIndex::Finite(1));
        let nilpotent = RbOperator::new(Matrix::from_vec(2, 2, vec![0, 1, 0, 0]), 0).unwrap();
        assert_eq!(operator_index(&f3, &nilpotent, 4), Some(2));
        let id = RbOperator::new(Matrix::identity(&f3, 2), 0).unwrap();
        assert_eq!(rb_index_of(&f3, &[id], 2), RbIndex::Infinite);
    }

    #[test]
    fn caps_and_workers() {
        let f = PrimeField::new(3).unwrap();
        let a = i_n(&f, 3).unwrap();
        assert!(enumerate_rb_finite(&a, &0, &SearchConfig::with_cap(100)).is_err());
        let one = SearchConfig {
            workers: Some(1),
            ..SearchConfig::default()
        };
        let many = SearchConfig {
            workers: Some(3),
            ..SearchConfig::default()
        };
        assert_eq!(
            enumerate_rb_finite(&a, &1, &one).unwrap(),
            enumerate_rb_finite(&a, &1, &many).unwrap()
        );
    }
}
