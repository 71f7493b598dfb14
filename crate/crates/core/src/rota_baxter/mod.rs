//! Rota–Baxter operators: the axiom on arbitrary algebras, the scalar
//! relation system on `I_n`, splitting operators and their decompositions.

pub mod cases;
pub mod decomposition;
pub mod enumerate;
pub mod examples;

pub use cases::{classify_case, rb_structure_check, totally_real_mechanism_check, Case, CaseCertificate, StructureCheck};
pub use decomposition::{
    decompositions_finite, splitting_from_decomposition, Decomposition, NormalForm, NormalFormCertificate,
};
pub use enumerate::{enumerate_rb_finite, enumerate_rb_raw, rb_index_finite, RbIndex};

use crate::algebra::{builders, Algebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{vector, Matrix, Subspace};
use crate::report::{Check, Residual};

/// A linear operator given by its matrix (column `j` holds `R(e_j)`) and a
/// weight `λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RbOperator<E> {
    pub matrix: Matrix<E>,
    pub weight: E,
}

impl<E: Clone + Eq> RbOperator<E> {
    pub fn new(matrix: Matrix<E>, weight: E) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "operator matrix is {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(Self { matrix, weight })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn zero<F: Field<Elem = E>>(f: &F, n: usize, weight: E) -> Self {
        Self {
            matrix: Matrix::zeros(f, n, n),
            weight,
        }
    }

    /// `-λ E`, the other trivial operator.
    pub fn minus_weight<F: Field<Elem = E>>(f: &F, n: usize, weight: E) -> Self {
        Self {
            matrix: Matrix::scalar(f, n, &f.neg(&weight)),
            weight,
        }
    }

    pub fn is_trivial<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.matrix.is_zero(f) || self.matrix == Matrix::scalar(f, self.dim(), &f.neg(&self.weight))
    }

    /// `φ(R) = -R - λE`.
    pub fn phi<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Self {
            matrix: self.matrix.neg(f).sub(f, &Matrix::scalar(f, self.dim(), &self.weight)),
            weight: self.weight.clone(),
        }
    }

    /// `R + λE`.
    pub fn shifted<F: Field<Elem = E>>(&self, f: &F) -> Matrix<E> {
        self.matrix.add(f, &Matrix::scalar(f, self.dim(), &self.weight))
    }

    /// `R² + λR = 0`.
    pub fn is_splitting<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.matrix.mul(f, &self.shifted(f)).is_zero(f)
    }

    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Subspace<E> {
        crate::linalg::kernel(f, &self.matrix)
    }

    /// `ker(R + λE)`.
    pub fn shifted_kernel<F: Field<Elem = E>>(&self, f: &F) -> Subspace<E> {
        crate::linalg::kernel(f, &self.shifted(f))
    }

    pub fn image<F: Field<Elem = E>>(&self, f: &F) -> Subspace<E> {
        Subspace::span(f, self.dim(), &self.matrix.columns())
    }
}

fn check_size<F: Field>(a: &Algebra<F>, r: &RbOperator<F::Elem>) -> Result<()> {
    if r.dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator of size {} on an algebra of dimension {}",
            r.dim(),
            a.dim()
        )));
    }
    Ok(())
}

/// `R(e_i)e_j + e_iR(e_j) + λe_ie_j` from precomputed columns.
pub(crate) fn axiom_argument<F: Field>(
    a: &Algebra<F>,
    columns: &[Vec<F::Elem>],
    weight: &F::Elem,
    i: usize,
    j: usize,
) -> Vec<F::Elem> {
    let f = a.field();
    let mut w = vector::add(f, &a.right_basis_mul(&columns[i], j), &a.left_basis_mul(i, &columns[j]));
    vector::axpy(f, &mut w, weight, a.product(i, j));
    w
}

/// `R(x)R(y) = R(R(x)y + xR(y) + λxy)` on every basis pair.
pub fn is_rb<F: Field>(a: &Algebra<F>, r: &RbOperator<F::Elem>) -> Result<Check> {
    check_size(a, r)?;
    let f = a.field();
    let columns = r.matrix.columns();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = a.multiply(&columns[i], &columns[j]);
            let rhs = r.matrix.mul_vec(f, &axiom_argument(a, &columns, &r.weight, i, j));
            if lhs != rhs {
                return Ok(Check::fail(
                    &[i, j],
                    format!(
                        "R(e_{0})R(e_{1}) = {2:?} but R(R(e_{0})e_{1} + e_{0}R(e_{1}) + λe_{0}e_{1}) = {3:?}",
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

/// Errors unless `a` has exactly the `I_n` table.
pub(crate) fn require_i_n<F: Field>(a: &Algebra<F>) -> Result<()> {
    if a.same_table(&builders::i_n(a.field(), a.dim())?) {
        Ok(())
    } else {
        Err(Error::NotInFamily("the relation system is specific to I_n's table".into()))
    }
}

/// The scalar relations equivalent to the Rota–Baxter axiom on `I_n`, in
/// terms of `R(e_i) = v_i + α_i e_n`, `v_{ki}` the `k`-th entry of `v_i`.
pub fn rb_residuals_i_n<F: Field>(a: &Algebra<F>, r: &RbOperator<F::Elem>) -> Result<Vec<Residual<F::Elem>>> {
    check_size(a, r)?;
    require_i_n(a)?;
    let f = a.field();
    let n = a.dim();
    let last = n - 1;
    let m = &r.matrix;
    let lam = &r.weight;
    let vij = |i: usize, j: usize| m[(i, j)].clone();
    let v: Vec<Vec<F::Elem>> = (0..n).map(|j| (0..last).map(|k| vij(k, j)).collect()).collect();
    let al: Vec<F::Elem> = (0..n).map(|j| m[(last, j)].clone()).collect();
    let dot = |x: &[F::Elem], y: &[F::Elem]| vector::dot(f, x, y);
    let mut out = Vec::new();
    let push_vec = |out: &mut Vec<Residual<F::Elem>>, name: String, value: Vec<F::Elem>| {
        for (k, x) in value.into_iter().enumerate() {
            out.push(Residual::new(format!("{name}, k={}]", k + 1), x));
        }
    };
    let two = f.from_i64(2);
    let three = f.from_i64(3);
    for i in 0..last {
        for j in 0..last {
            let mut s = f.add(&vij(i, j), &vij(j, i));
            if i == j {
                s = f.add(&s, lam);
            }
            let idx = format!("i={}, j={}", i + 1, j + 1);
            push_vec(
                &mut out,
                format!("(v_ij + v_ji + λδ_ij) v_n = 0 [{idx}"),
                vector::scale(f, &s, &v[last]),
            );
            let lhs = f.add(&dot(&v[i], &v[j]), &f.mul(&al[i], &al[j]));
            out.push(Residual::new(
                format!("(v_i,v_j) + α_iα_j = (v_ij + v_ji + λδ_ij)α_n [{idx}]"),
                f.sub(&lhs, &f.mul(&s, &al[last])),
            ));
        }
    }
    for i in 0..last {
        let idx = format!("i={}", i + 1);
        let s = f.add(&al[i], &vij(i, last));
        push_vec(&mut out, format!("(α_i + v_in) v_n = 0 [{idx}"), vector::scale(f, &s, &v[last]));
        out.push(Residual::new(
            format!("(v_i,v_n) = v_in α_n [{idx}]"),
            f.sub(&dot(&v[i], &v[last]), &f.mul(&vij(i, last), &al[last])),
        ));
    }
    for j in 0..last {
        let idx = format!("j={}", j + 1);
        let mut acc = vector::scale(f, lam, &v[j]);
        for k in 0..last {
            vector::axpy(f, &mut acc, &vij(k, j), &v[k]);
        }
        let c = f.add(&vij(j, last), &f.mul(&two, &al[j]));
        vector::axpy(f, &mut acc, &c, &v[last]);
        push_vec(&mut out, format!("λv_j + Σ_k v_kj v_k + (v_jn + 2α_j) v_n = 0 [{idx}"), acc);
        let mut lhs = f.mul(lam, &al[j]);
        for k in 0..last {
            lhs = f.add(&lhs, &f.mul(&al[k], &vij(k, j)));
        }
        lhs = f.add(&lhs, &f.mul(&f.add(&vij(j, last), &al[j]), &al[last]));
        out.push(Residual::new(
            format!("Σ_k α_k v_kj + λα_j + (v_jn + α_j)α_n = (v_n,v_j) [{idx}]"),
            f.sub(&lhs, &dot(&v[last], &v[j])),
        ));
    }
    let c = f.add(&f.mul(&three, &al[last]), &f.mul(&two, lam));
    let mut acc = vector::scale(f, &c, &v[last]);
    for k in 0..last {
        vector::axpy(f, &mut acc, &vij(k, last), &v[k]);
    }
    push_vec(&mut out, "(3α_n + 2λ) v_n + Σ_k v_kn v_k = 0 [n".into(), acc);
    let mut lhs = f.mul(&two, &f.mul(&al[last], &f.add(&al[last], lam)));
    for k in 0..last {
        lhs = f.add(&lhs, &f.mul(&al[k], &vij(k, last)));
    }
    out.push(Residual::new(
        "Σ_k α_k v_kn + 2α_n(α_n + λ) = (v_n,v_n) [n]".to_string(),
        f.sub(&lhs, &dot(&v[last], &v[last])),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders::i_n;
    use crate::field::{PrimeField, Rationals};
    use crate::finite::MatrixSpace;
    use crate::report::all_zero;
    use rand::{Rng, SeedableRng};

    #[test]
    fn trivial_operators() {
        let q = Rationals;
        let a = i_n(&q, 3).unwrap();
        for w in [0, 1, -2] {
            let lam = q.from_i64(w);
            let zero = RbOperator::zero(&q, 3, lam.clone());
            let minus = RbOperator::minus_weight(&q, 3, lam.clone());
            assert!(is_rb(&a, &zero).unwrap().holds);
            assert!(is_rb(&a, &minus).unwrap().holds);
            assert_eq!(zero.phi(&q), minus);
            assert_eq!(minus.phi(&q), zero);
            assert!(minus.is_splitting(&q));
            assert!(all_zero(&q, &rb_residuals_i_n(&a, &zero).unwrap()));
        }
        let id = RbOperator::new(Matrix::identity(&q, 3), q.one()).unwrap();
        assert!(!id.is_splitting(&q));
    }

    #[test]
    fn weight_zero_phi_is_negation() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::from_vec(2, 2, vec![1, 2, 3, 4]);
        let r = RbOperator::new(m.clone(), 0).unwrap();
        assert_eq!(r.phi(&f).matrix, m.neg(&f));
        assert_eq!(r.phi(&f).phi(&f), r);
    }

    #[test]
    fn residuals_match_axiom_exhaustively_on_gf3_i2() {
        let f = PrimeField::new(3).unwrap();
        let a = i_n(&f, 2).unwrap();
        let space = MatrixSpace::new(&f, 2, 2, 100).unwrap();
        for lam in 0..3 {
            for idx in 0..space.len() {
                let r = RbOperator::new(space.get(idx), lam).unwrap();
                let res = all_zero(&f, &rb_residuals_i_n(&a, &r).unwrap());
                assert_eq!(res, is_rb(&a, &r).unwrap().holds, "{r:?}");
            }
        }
    }

    #[test]
    fn residuals_match_axiom_on_random_gf5_i3() {
        let f = PrimeField::new(5).unwrap();
        let a = i_n(&f, 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let m = Matrix::from_vec(3, 3, (0..9).map(|_| rng.random_range(0..5)).collect());
            let r = RbOperator::new(m, rng.random_range(0..5)).unwrap();
            let res = all_zero(&f, &rb_residuals_i_n(&a, &r).unwrap());
            assert_eq!(res, is_rb(&a, &r).unwrap().holds);
        }
    }

    #[test]
    fn non_i_n_is_rejected_by_residuals() {
        let q = Rationals;
        let a = crate::algebra::builders::unital_extension(&i_n(&q, 2).unwrap());
        let r = RbOperator::zero(&q, 3, q.zero());
        assert!(matches!(rb_residuals_i_n(&a, &r), Err(Error::NotInFamily(_))));
        assert!(is_rb(&a, &r).unwrap().holds);
    }
}
