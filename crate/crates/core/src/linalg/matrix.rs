use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix of field elements.
///
/// The matrix does not own its field; arithmetic takes the field explicitly.
/// For linear operators the convention throughout the crate is that column
/// `j` holds the coordinates of the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;

    fn index(&self, (r, c): (usize, usize)) -> &E {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut E {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(rows * cols, data.len());
        Self { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self::from_vec(rows, cols, vec![value; rows * cols])
    }

    /// Builds from rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Self::from_vec(nrows, cols, data))
    }

    /// Builds an `n x m` matrix whose column `j` is `columns[j]`.
    pub fn from_columns(n: usize, columns: &[Vec<E>]) -> Self {
        let m = columns.len();
        let mut data = Vec::with_capacity(n * m);
        for r in 0..n {
            for col in columns {
                data.push(col[r].clone());
            }
        }
        Self::from_vec(n, m, data)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self[(r, c)].clone());
            }
        }
        Self::from_vec(self.cols, self.rows, data)
    }

    pub fn map<T: Clone>(&self, f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix::from_vec(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    /// The top-left `k x k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        let mut data = Vec::with_capacity(k * k);
        for r in 0..k {
            data.extend_from_slice(&self.row(r)[..k]);
        }
        Self::from_vec(k, k, data)
    }
}

impl<E: Clone + Eq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Self::scalar(f, n, &f.one())
    }

    pub fn scalar<F: Field<Elem = E>>(f: &F, n: usize, s: &E) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.is_square() && *self == Self::identity(f, self.rows)
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Self::from_vec(self.rows, self.cols, data)
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Self::from_vec(self.rows, self.cols, data)
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        self.map(|x| f.neg(x))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        self.map(|x| f.mul(s, x))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, &other[(k, j)]);
                    out[(i, j)] = f.add(&out[(i, j)], &t);
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !f.is_zero(a) && !f.is_zero(b))
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, k: u32) -> Self {
        assert!(self.is_square());
        (0..k).fold(Self::identity(f, self.rows), |acc, _| acc.mul(f, self))
    }

    pub fn trace<F: Field<Elem = E>>(&self, f: &F) -> E {
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, &self[(i, i)]))
    }

    /// `diag(self, other)`.
    pub fn block_diag<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = Self::zeros(f, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    pub fn format<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<String>> {
        self.rows().map(|r| r.iter().map(|x| f.format(x)).collect()).collect()
    }

    pub fn parse<F: Field<Elem = E>>(f: &F, rows: &[Vec<String>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| f.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, parsed)
    }
}

/// Vector helpers; vectors are plain `Vec<E>` coordinate lists.
pub mod vector {
    use crate::field::Field;

    pub fn zeros<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
        vec![f.zero(); n]
    }

    /// The basis vector `e_i` (0-based `i`).
    pub fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
        let mut v = zeros(f, n);
        v[i] = f.one();
        v
    }

    pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
    }

    pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
    }

    pub fn scale<F: Field>(f: &F, s: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| f.mul(s, x)).collect()
    }

    /// `acc += s * a` in place.
    pub fn axpy<F: Field>(f: &F, acc: &mut [F::Elem], s: &F::Elem, a: &[F::Elem]) {
        if f.is_zero(s) {
            return;
        }
        for (x, y) in acc.iter_mut().zip(a) {
            if !f.is_zero(y) {
                *x = f.add(x, &f.mul(s, y));
            }
        }
    }

    pub fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
    }

    pub fn is_zero<F: Field>(f: &F, a: &[F::Elem]) -> bool {
        a.iter().all(|x| f.is_zero(x))
    }

    pub fn format<F: Field>(f: &F, a: &[F::Elem]) -> Vec<String> {
        a.iter().map(|x| f.format(x)).collect()
    }

    pub fn parse<F: Field>(f: &F, a: &[String]) -> crate::Result<Vec<F::Elem>> {
        a.iter().map(|s| f.parse(s)).collect()
    }
}
