use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use prelie_core::algebra::builders::{i_n, minus_algebra, plus_algebra};
use prelie_core::algebra::ideals::ideal_closure;
use prelie_core::algebra::identities::{check_identity, Identity};
use prelie_core::field::{Field, PrimeField, Rationals};
use prelie_core::linalg::{inverse, kernel, rank, vector, Matrix, Subspace};
use prelie_core::rota_baxter::RbOperator;

fn gf5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn gf5_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<u64>> {
    prop::collection::vec(0u64..5, rows * cols).prop_map(move |v| Matrix::from_vec(rows, cols, v))
}

fn gf5_vector(n: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..5, n)
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        let q = Rationals;
        prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
        prop_assert_eq!(q.sub(&q.add(&a, &b), &b), a.clone());
        if !q.is_zero(&a) {
            prop_assert!(q.is_one(&q.mul(&a, &q.inv(&a).unwrap())));
        }
        prop_assert_eq!(q.parse(&q.format(&a)).unwrap(), a);
    }

    #[test]
    fn kernel_and_rank(m in gf5_matrix(3, 5)) {
        let f = gf5();
        let k = kernel(&f, &m);
        prop_assert_eq!(rank(&f, &m) + k.dim(), 5);
        for v in k.basis_vectors() {
            prop_assert!(vector::is_zero(&f, &m.mul_vec(&f, &v)));
        }
    }

    #[test]
    fn inverses(m in gf5_matrix(3, 3)) {
        let f = gf5();
        match inverse(&f, &m) {
            Some(inv) => {
                prop_assert!(m.mul(&f, &inv).is_identity(&f));
                prop_assert!(inv.mul(&f, &m).is_identity(&f));
            }
            None => prop_assert!(rank(&f, &m) < 3),
        }
    }

    #[test]
    fn subspace_dimension_formula(a in gf5_matrix(2, 4), b in gf5_matrix(2, 4)) {
        let f = gf5();
        let u = Subspace::span(&f, 4, &a.to_rows());
        let w = Subspace::span(&f, 4, &b.to_rows());
        let sum = u.sum(&f, &w).unwrap();
        let meet = u.intersect(&f, &w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&f, &u) && meet.is_subspace_of(&f, &w));
    }

    #[test]
    fn i_n_product_formula(v in gf5_vector(3), u in gf5_vector(3), alpha in 0u64..5, beta in 0u64..5) {
        // (v + αe_n)(u + βe_n) = αu + ((v,u) + 2αβ)e_n
        let f = gf5();
        let a = i_n(&f, 4).unwrap();
        let mut x = v.clone();
        x.push(alpha);
        let mut y = u.clone();
        y.push(beta);
        let mut expected = vector::scale(&f, &alpha, &u);
        expected.push(f.add(&vector::dot(&f, &v, &u), &f.mul(&2, &f.mul(&alpha, &beta))));
        prop_assert_eq!(a.multiply(&x, &y), expected);
    }

    #[test]
    fn multiplication_is_bilinear(x in gf5_vector(3), y in gf5_vector(3), z in gf5_vector(3), s in 0u64..5) {
        let f = gf5();
        let a = i_n(&f, 3).unwrap();
        let lhs = a.multiply(&vector::add(&f, &x, &vector::scale(&f, &s, &y)), &z);
        let rhs = vector::add(&f, &a.multiply(&x, &z), &vector::scale(&f, &s, &a.multiply(&y, &z)));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(vector::is_zero(&f, &a.multiply(&vector::zeros(&f, 3), &z)));
    }

    #[test]
    fn phi_is_an_involution(m in gf5_matrix(3, 3), w in 0u64..5) {
        let f = gf5();
        let r = RbOperator::new(m, w).unwrap();
        prop_assert_eq!(r.phi(&f).phi(&f), r.clone());
        prop_assert_eq!(r.is_splitting(&f), r.phi(&f).is_splitting(&f));
    }

    #[test]
    fn ideal_closure_is_a_closure(seed in gf5_matrix(1, 4)) {
        let f = gf5();
        let a = i_n(&f, 4).unwrap();
        let s = Subspace::span(&f, 4, &seed.to_rows());
        let ideal = ideal_closure(&a, &s).unwrap().into_space();
        prop_assert!(s.is_subspace_of(&f, &ideal));
        prop_assert_eq!(ideal_closure(&a, &ideal).unwrap().into_space(), ideal.clone());
        // I_4 is simple
        prop_assert!(ideal.is_zero() || ideal.is_full());
    }

    #[test]
    fn derived_algebras_of_random_tables(entries in prop::collection::vec(0u64..5, 27)) {
        let f = gf5();
        let table: Vec<_> = entries
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(idx, c)| (idx / 9 + 1, idx / 3 % 3 + 1, idx % 3 + 1, *c))
            .collect();
        let a = prelie_core::algebra::Algebra::from_table(f.clone(), 3, table).unwrap();
        prop_assert!(check_identity(&plus_algebra(&a).unwrap(), Identity::Commutative).holds);
        let minus = minus_algebra(&a);
        prop_assert!(check_identity(&minus, Identity::Anticommutative).holds);
        if check_identity(&a, Identity::PreLie).holds {
            prop_assert!(check_identity(&minus, Identity::Jacobi).holds);
        }
    }
}
