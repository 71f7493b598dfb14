//! Cross-checks against direct computations that do not go through the
//! basis-level checkers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prelie_core::algebra::builders::{dot_product_algebra, i_n};
use prelie_core::algebra::identities::{check_identity, Identity};
use prelie_core::algebra::Algebra;
use prelie_core::field::{Field, PrimeField, Rationals};
use prelie_core::finite::{MatrixSpace, SearchConfig};
use prelie_core::linalg::{vector, Matrix};
use prelie_core::rota_baxter::{enumerate_rb_finite, is_rb, RbOperator};
use prelie_core::symmetry;

fn random_vector<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..n).map(|_| f.random(rng)).collect()
}

/// `(xy)z - x(yz) - (yx)z + y(xz)` on explicit vectors.
fn pre_lie_defect<F: Field>(a: &Algebra<F>, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
    let f = a.field();
    let lhs = vector::sub(f, &a.multiply(&a.multiply(x, y), z), &a.multiply(x, &a.multiply(y, z)));
    let rhs = vector::sub(f, &a.multiply(&a.multiply(y, x), z), &a.multiply(y, &a.multiply(x, z)));
    vector::sub(f, &lhs, &rhs)
}

#[test]
fn pre_lie_on_random_vectors() {
    let q = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let one = q.one();
    let dot = dot_product_algebra(&q, 3, &[one.clone(), one, q.zero()]).unwrap();
    assert!(check_identity(&dot, Identity::PreLie).holds);
    let mut algebras: Vec<_> = (1..=5).map(|n| i_n(&q, n).unwrap()).collect();
    algebras.push(dot);
    for a in &algebras {
        let n = a.dim();
        for _ in 0..50 {
            let x = random_vector(&q, n, &mut rng);
            let y = random_vector(&q, n, &mut rng);
            let z = random_vector(&q, n, &mut rng);
            assert!(vector::is_zero(&q, &pre_lie_defect(a, &x, &y, &z)));
        }
    }
}

#[test]
fn non_pre_lie_algebra_is_caught() {
    // e1 e1 = e2, e2 e1 = e1: the left-symmetric identity fails
    let f = PrimeField::new(5).unwrap();
    let a = Algebra::from_table(f.clone(), 2, vec![(1, 1, 2, 1), (2, 1, 1, 1)]).unwrap();
    let c = check_identity(&a, Identity::PreLie);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let random_fail = (0..200).any(|_| {
        let (x, y, z) = (random_vector(&f, 2, &mut rng), random_vector(&f, 2, &mut rng), random_vector(&f, 2, &mut rng));
        !vector::is_zero(&f, &pre_lie_defect(&a, &x, &y, &z))
    });
    assert!(!c.holds);
    assert!(random_fail);
}

#[test]
fn rb_axiom_on_vectors() {
    let f = PrimeField::new(5).unwrap();
    let a = i_n(&f, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for r in enumerate_rb_finite(&a, &1, &SearchConfig::default()).unwrap() {
        for _ in 0..20 {
            let (x, y) = (random_vector(&f, 2, &mut rng), random_vector(&f, 2, &mut rng));
            let rx = r.matrix.mul_vec(&f, &x);
            let ry = r.matrix.mul_vec(&f, &y);
            let inner = vector::add(
                &f,
                &vector::add(&f, &a.multiply(&rx, &y), &a.multiply(&x, &ry)),
                &a.multiply(&x, &y),
            );
            assert_eq!(a.multiply(&rx, &ry), r.matrix.mul_vec(&f, &inner));
        }
    }
    let id = RbOperator::new(Matrix::identity(&f, 2), 1).unwrap();
    assert!(!is_rb(&a, &id).unwrap().holds);
}

#[test]
fn derivation_dimension_by_brute_force() {
    let f = PrimeField::new(3).unwrap();
    for n in 2..=3 {
        let a = i_n(&f, n).unwrap();
        let space = MatrixSpace::new(&f, n, n, 1 << 20).unwrap();
        let count = (0..space.len())
            .filter(|&i| symmetry::is_derivation(&a, &space.get(i)).unwrap().holds)
            .count();
        let dim = symmetry::derivation_algebra(&a).dim() as u32;
        assert_eq!(count, 3usize.pow(dim));
    }
}

#[test]
fn automorphisms_of_i2() {
    let f = PrimeField::new(3).unwrap();
    let a = i_n(&f, 2).unwrap();
    let all = symmetry::enumerate_automorphisms_finite(&a, &SearchConfig::default()).unwrap();
    assert_eq!(all, vec![Matrix::from_vec(2, 2, vec![1, 0, 0, 1]), Matrix::from_vec(2, 2, vec![2, 0, 0, 1])]);
    assert!(!symmetry::is_automorphism(&a, &Matrix::from_vec(2, 2, vec![1, 0, 0, 2])).unwrap().holds);
}
