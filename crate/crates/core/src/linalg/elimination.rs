use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::field::Field;

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<E> {
    /// Reduced row-echelon form, same shape as the input.
    pub matrix: Matrix<E>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form by Gauss-Jordan elimination.
pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&a[(i, c)])) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                let tmp = a[(p, k)].clone();
                a[(p, k)] = a[(r, k)].clone();
                a[(r, k)] = tmp;
            }
        }
        let inv = f.inv(&a[(r, c)]).expect("pivot is nonzero");
        for k in c..cols {
            a[(r, k)] = f.mul(&inv, &a[(r, k)]);
        }
        for i in 0..rows {
            if i == r || f.is_zero(&a[(i, c)]) {
                continue;
            }
            let factor = a[(i, c)].clone();
            for k in c..cols {
                let t = f.mul(&factor, &a[(r, k)]);
                a[(i, k)] = f.sub(&a[(i, k)], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        rank: r,
        pivots,
    }
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rref(f, m).rank
}

/// `{x : M x = 0}` as a canonical subspace of `F^cols`.
pub fn kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    let cols = m.ncols();
    let Rref { matrix, pivots, .. } = rref(f, m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(&matrix[(r, free)]);
        }
        basis.push(v);
    }
    Subspace::span(f, cols, &basis)
}

/// One solution of `M x = b` with free variables set to zero, or `None`.
pub fn solve<F: Field>(f: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.nrows(), b.len(), "right-hand side length");
    let cols = m.ncols();
    let augmented = Matrix::from_rows(
        cols + 1,
        m.rows()
            .zip(b)
            .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
            .collect(),
    )
    .expect("rectangular");
    let Rref { matrix, pivots, .. } = rref(f, &augmented);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = matrix[(r, cols)].clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if !m.is_square() {
        return None;
    }
    let n = m.nrows();
    let augmented = Matrix::from_rows(
        2 * n,
        m.rows()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.to_vec();
                r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
                r
            })
            .collect(),
    )
    .expect("rectangular");
    let reduced = rref(f, &augmented);
    if reduced.pivots.len() < n || reduced.pivots[n - 1] != n - 1 {
        return None;
    }
    let rows = (0..n).map(|r| reduced.matrix.row(r)[n..].to_vec()).collect();
    Some(Matrix::from_rows(n, rows).expect("square"))
}

pub fn is_invertible<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    m.is_square() && rank(f, m) == m.nrows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, PrimeField, Rationals};

    #[test]
    fn rref_examples() {
        let q = Rationals;
        let id = Matrix::identity(&q, 3);
        let r = rref(&q, &id);
        assert_eq!((r.matrix, r.rank), (id.clone(), 3));
        let z = Matrix::zeros(&q, 3, 3);
        assert_eq!(rref(&q, &z).rank, 0);

        let f = PrimeField::new(3).unwrap();
        let m = Matrix::from_rows(2, vec![vec![1, 2], vec![2, 1]]).unwrap();
        let r = rref(&f, &m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.row(0), &[1, 2]);
        assert_eq!(r.matrix.row(1), &[0, 0]);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let q = Rationals;
        assert_eq!(kernel(&q, &Matrix::identity(&q, 3)).dim(), 0);
        assert_eq!(kernel(&q, &Matrix::zeros(&q, 3, 3)).dim(), 3);
        let ones = Matrix::filled(1, 4, q.one());
        let k = kernel(&q, &ones);
        assert_eq!(k.dim(), 3);
        for v in k.basis_vectors() {
            assert!(ones.mul_vec(&q, &v).iter().all(|x| q.is_zero(x)));
        }
    }

    #[test]
    fn solve_examples() {
        let f = PrimeField::new(5).unwrap();
        let id = Matrix::identity(&f, 3);
        assert_eq!(solve(&f, &id, &[1, 2, 3]), Some(vec![1, 2, 3]));
        let z = Matrix::zeros(&f, 2, 2);
        assert_eq!(solve(&f, &z, &[1, 0]), None);
        let row = Matrix::from_rows(2, vec![vec![1, 1]]).unwrap();
        assert_eq!(solve(&f, &row, &[3]), Some(vec![3, 0]));
    }

    #[test]
    fn inverse_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(3, vec![vec![1, 2, 0], vec![0, 1, 4], vec![5, 0, 1]]).unwrap();
        let inv = inverse(&f, &m).unwrap();
        assert!(m.mul(&f, &inv).is_identity(&f));
        let singular = Matrix::from_rows(2, vec![vec![1, 2], vec![2, 4]]).unwrap();
        assert!(inverse(&f, &singular).is_none());
        assert!(!is_invertible(&f, &singular));
    }
}
