//! Automorphisms and derivations of structure-constant algebras, and the
//! explicit scalar relation systems describing them on `I_n`.

use rayon::prelude::*;

use crate::algebra::{builders, Algebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::finite::{MatrixSpace, SearchConfig};
use crate::linalg::forms::{orthogonality_defect, skew_defect};
use crate::linalg::{is_invertible, kernel, vector, Matrix, Subspace};
use crate::report::{Check, Residual};

fn check_square<F: Field>(a: &Algebra<F>, m: &Matrix<F::Elem>) -> Result<()> {
    if m.nrows() != a.dim() || m.ncols() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix on an algebra of dimension {}",
            m.nrows(),
            m.ncols(),
            a.dim()
        )));
    }
    Ok(())
}

/// `φ(e_i e_j) = φ(e_i) φ(e_j)` on every basis pair; no invertibility test.
pub fn is_homomorphism<F: Field>(a: &Algebra<F>, m: &Matrix<F::Elem>) -> Result<Check> {
    check_square(a, m)?;
    let f = a.field();
    let images = m.columns();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = m.mul_vec(f, a.product(i, j));
            let rhs = a.multiply(&images[i], &images[j]);
            if lhs != rhs {
                return Ok(Check::fail(
                    &[i, j],
                    format!(
                        "φ(e_{0}e_{1}) = {2:?} but φ(e_{0})φ(e_{1}) = {3:?}",
                        i + 1,
                        j + 1,
                        vector::format(f, &lhs),
                        vector::format(f, &rhs)
                    ),
                ));
            }
        }
    }
    Ok(Check::pass())
}

/// `M` (columns are the images of the basis) is an invertible homomorphism.
pub fn is_automorphism<F: Field>(a: &Algebra<F>, m: &Matrix<F::Elem>) -> Result<Check> {
    let hom = is_homomorphism(a, m)?;
    if !hom.holds {
        return Ok(hom);
    }
    if !is_invertible(a.field(), m) {
        return Ok(Check::fail(&[], "the map is not invertible"));
    }
    Ok(Check::pass())
}

/// `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)` on every basis pair.
pub fn is_derivation<F: Field>(a: &Algebra<F>, d: &Matrix<F::Elem>) -> Result<Check> {
    check_square(a, d)?;
    let f = a.field();
    let images = d.columns();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = d.mul_vec(f, a.product(i, j));
            let rhs = vector::add(f, &a.right_basis_mul(&images[i], j), &a.left_basis_mul(i, &images[j]));
            if lhs != rhs {
                return Ok(Check::fail(
                    &[i, j],
                    format!(
                        "D(e_{0}e_{1}) = {2:?} but D(e_{0})e_{1} + e_{0}D(e_{1}) = {3:?}",
                        i + 1,
                        j + 1,
                        vector::format(f, &lhs),
                        vector::format(f, &rhs)
                    ),
                ));
            }
        }
    }
    Ok(Check::pass())
}

/// The derivations as a subspace of `F^{n²}`; a matrix `D` is flattened row
/// by row.
pub fn derivation_algebra<F: Field>(a: &Algebra<F>) -> Subspace<F::Elem> {
    let f = a.field();
    let n = a.dim();
    let var = |row: usize, col: usize| row * n + col;
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut eq = vector::zeros(f, n * n);
                // coordinate k of D(e_i e_j)
                for (l, c) in a.product(i, j).iter().enumerate() {
                    eq[var(k, l)] = f.add(&eq[var(k, l)], c);
                }
                // minus coordinate k of D(e_i) e_j + e_i D(e_j)
                for l in 0..n {
                    let c = &a.product(l, j)[k];
                    eq[var(l, i)] = f.sub(&eq[var(l, i)], c);
                    let c = &a.product(i, l)[k];
                    eq[var(l, j)] = f.sub(&eq[var(l, j)], c);
                }
                rows.push(eq);
            }
        }
    }
    kernel(f, &Matrix::from_rows(n * n, rows).expect("rectangular"))
}

/// Basis matrices of [`derivation_algebra`].
pub fn derivation_basis<F: Field>(a: &Algebra<F>) -> Vec<Matrix<F::Elem>> {
    let n = a.dim();
    derivation_algebra(a)
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_vec(n, n, v))
        .collect()
}

/// `block(Q, 1)`, rejecting non-orthogonal `Q`.
pub fn automorphism_from_orthogonal<F: Field>(f: &F, q: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if let Some((row, col)) = orthogonality_defect(f, q) {
        return Err(Error::NotOrthogonal { row: row + 1, col: col + 1 });
    }
    Ok(q.block_diag(f, &Matrix::identity(f, 1)))
}

/// `block(S, 0)`, rejecting non-skew `S`.
pub fn derivation_from_skew<F: Field>(f: &F, s: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if let Some((row, col)) = skew_defect(f, s) {
        return Err(Error::NotSkew { row: row + 1, col: col + 1 });
    }
    Ok(s.block_diag(f, &Matrix::zeros(f, 1, 1)))
}

/// Every automorphism of a finite-field algebra, found by testing all
/// `q^{n²}` matrices, in lexicographic order of their row-major entries.
pub fn enumerate_automorphisms_finite<F: Field>(a: &Algebra<F>, config: &SearchConfig) -> Result<Vec<Matrix<F::Elem>>> {
    let n = a.dim();
    let space = MatrixSpace::new(a.field(), n, n, config.cap)?;
    config.run(|| {
        (0..space.len())
            .into_par_iter()
            .map(|idx| space.get(idx))
            .filter(|m| is_automorphism(a, m).map(|c| c.holds).unwrap_or(false))
            .collect()
    })
}

/// All `m x m` matrices with `Q Q^T = E` over a finite field, by exhaustion.
pub fn enumerate_orthogonal<F: Field>(f: &F, m: usize, config: &SearchConfig) -> Result<Vec<Matrix<F::Elem>>> {
    let space = MatrixSpace::new(f, m, m, config.cap)?;
    config.run(|| {
        (0..space.len())
            .into_par_iter()
            .map(|idx| space.get(idx))
            .filter(|q| orthogonality_defect(f, q).is_none())
            .collect()
    })
}

fn require_i_n<F: Field>(a: &Algebra<F>) -> Result<()> {
    let expected = builders::i_n(a.field(), a.dim())?;
    if a.same_table(&expected) {
        Ok(())
    } else {
        Err(Error::NotInFamily("the relation system is specific to I_n's table".into()))
    }
}

/// Reads `M e_i = v_i + α_i e_n`: returns `(v, α)` with `v[i]` the first
/// `n - 1` entries of column `i` and `α[i]` its last entry.
fn split_columns<E: Clone>(m: &Matrix<E>) -> (Vec<Vec<E>>, Vec<E>) {
    let n = m.nrows();
    m.columns()
        .into_iter()
        .map(|c| (c[..n - 1].to_vec(), c[n - 1].clone()))
        .unzip()
}

struct Collector<'f, F: Field> {
    f: &'f F,
    out: Vec<Residual<F::Elem>>,
}

impl<F: Field> Collector<'_, F> {
    fn scalar(&mut self, group: &str, indices: String, value: F::Elem) {
        self.out.push(Residual::new(format!("{group} [{indices}]"), value));
    }

    fn vector(&mut self, group: &str, indices: String, value: &[F::Elem]) {
        for (k, v) in value.iter().enumerate() {
            self.out.push(Residual::new(format!("{group} [{indices}, k={}]", k + 1), v.clone()));
        }
    }

    fn lin(&self, s: &F::Elem, v: &[F::Elem]) -> Vec<F::Elem> {
        vector::scale(self.f, s, v)
    }
}

/// The scalar relations equivalent to `φ(e_i e_j) = φ(e_i)φ(e_j)` on `I_n`,
/// written in terms of `φ(e_i) = v_i + α_i e_n`. Every residual vanishes iff
/// `M` is a homomorphism; invertibility is not part of the system.
pub fn automorphism_residuals<F: Field>(a: &Algebra<F>, m: &Matrix<F::Elem>) -> Result<Vec<Residual<F::Elem>>> {
    check_square(a, m)?;
    require_i_n(a)?;
    let f = a.field();
    let n = a.dim();
    let last = n - 1;
    let (v, al) = split_columns(m);
    let two = f.from_i64(2);
    let dot = |x: &[F::Elem], y: &[F::Elem]| vector::dot(f, x, y);
    let mut c = Collector { f, out: Vec::new() };
    for i in 0..last {
        let idx = format!("i={}", i + 1);
        c.vector("α_i v_i = v_n", idx.clone(), &vector::sub(f, &c.lin(&al[i], &v[i]), &v[last]));
        let lhs = f.add(&dot(&v[i], &v[i]), &f.mul(&two, &f.mul(&al[i], &al[i])));
        c.scalar("(v_i,v_i) + 2α_i² = α_n", idx, f.sub(&lhs, &al[last]));
    }
    c.vector("α_n v_n = 2v_n", String::from("n"), &vector::sub(f, &c.lin(&al[last], &v[last]), &c.lin(&two, &v[last])));
    let lhs = f.add(&dot(&v[last], &v[last]), &f.mul(&two, &f.mul(&al[last], &al[last])));
    c.scalar("(v_n,v_n) + 2α_n² = 2α_n", String::from("n"), f.sub(&lhs, &f.mul(&two, &al[last])));
    for i in 0..last {
        for j in (0..last).filter(|&j| j != i) {
            let idx = format!("i={}, j={}", i + 1, j + 1);
            c.vector("α_i v_j = 0", idx.clone(), &c.lin(&al[i], &v[j]));
            let value = f.add(&dot(&v[i], &v[j]), &f.mul(&two, &f.mul(&al[i], &al[j])));
            c.scalar("(v_i,v_j) + 2α_iα_j = 0", idx, value);
        }
    }
    for i in 0..last {
        let idx = format!("i={}", i + 1);
        c.vector("α_i v_n = 0", idx.clone(), &c.lin(&al[i], &v[last]));
        let value = f.add(&dot(&v[last], &v[i]), &f.mul(&two, &f.mul(&al[last], &al[i])));
        c.scalar("(v_n,v_i) + 2α_nα_i = 0", idx, value);
    }
    for j in 0..last {
        let idx = format!("j={}", j + 1);
        c.vector("α_n v_j = v_j", idx.clone(), &vector::sub(f, &c.lin(&al[last], &v[j]), &v[j]));
        let lhs = f.add(&dot(&v[last], &v[j]), &f.mul(&two, &f.mul(&al[last], &al[j])));
        c.scalar("(v_n,v_j) + 2α_nα_j = α_j", idx, f.sub(&lhs, &al[j]));
    }
    Ok(c.out)
}

/// The scalar relations equivalent to the Leibniz rule on `I_n`, written in
/// terms of `d(e_i) = w_i + γ_i e_n` with `w_{ki}` the `k`-th entry of `w_i`.
pub fn derivation_residuals<F: Field>(a: &Algebra<F>, d: &Matrix<F::Elem>) -> Result<Vec<Residual<F::Elem>>> {
    check_square(a, d)?;
    require_i_n(a)?;
    let f = a.field();
    let n = a.dim();
    let last = n - 1;
    let (w, ga) = split_columns(d);
    // w_{ki}
    let entry = |k: usize, i: usize| d[(k, i)].clone();
    let two = f.from_i64(2);
    let mut c = Collector { f, out: Vec::new() };
    for i in 0..last {
        let idx = format!("i={}", i + 1);
        let lhs = c.lin(&ga[i], &vector::unit(f, last, i));
        c.vector("γ_i e_i = w_n", idx.clone(), &vector::sub(f, &lhs, &w[last]));
        c.scalar("2w_ii = γ_n", idx, f.sub(&f.mul(&two, &entry(i, i)), &ga[last]));
    }
    c.vector("w_n = 2w_n", String::from("n"), &vector::sub(f, &c.lin(&two, &w[last]), &w[last]));
    c.scalar("4γ_n = 2γ_n", String::from("n"), f.sub(&f.mul(&f.from_i64(4), &ga[last]), &f.mul(&two, &ga[last])));
    for i in 0..last {
        for j in (0..last).filter(|&j| j != i) {
            let idx = format!("i={}, j={}", i + 1, j + 1);
            c.scalar("γ_i e_j = 0", idx.clone(), ga[i].clone());
            c.scalar("w_ij + w_ji = 0", idx, f.add(&entry(i, j), &entry(j, i)));
        }
    }
    for i in 0..last {
        let idx = format!("i={}", i + 1);
        c.scalar("w_in + 2γ_i = 0", idx, f.add(&entry(i, last), &f.mul(&two, &ga[i])));
    }
    for j in 0..last {
        let idx = format!("j={}", j + 1);
        c.scalar("γ_n e_j = 0", idx.clone(), ga[last].clone());
        c.scalar("w_jn + γ_j = 0", idx, f.add(&entry(j, last), &ga[j]));
    }
    Ok(c.out)
}
