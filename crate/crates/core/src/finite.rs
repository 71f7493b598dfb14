//! Exhaustive enumeration over finite fields: matrix spaces, subspaces,
//! projective points, and the search-size caps guarding them.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

pub const DEFAULT_CAP: u64 = 10_000_000;
pub const DEFAULT_SIMPLICITY_CAP: u64 = 1_000_000;

/// Limits for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest admissible search-space size.
    pub cap: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            workers: None,
        }
    }
}

impl SearchConfig {
    pub fn with_cap(cap: u64) -> Self {
        Self { cap, ..Self::default() }
    }

    /// Runs `job` on a pool with the configured worker count.
    pub fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(job()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w.max(1))
                    .build()
                    .map_err(|e| Error::ThreadPool(e.to_string()))?;
                Ok(pool.install(job))
            }
        }
    }
}

/// `q^exponent`, or an error when it exceeds `cap`.
pub fn check_cap(q: u64, exponent: usize, cap: u64) -> Result<u64> {
    let size = u32::try_from(exponent).ok().and_then(|e| q.checked_pow(e));
    match size {
        Some(s) if s <= cap => Ok(s),
        _ => Err(Error::CapExceeded {
            size: format!("{q}^{exponent}"),
            cap,
        }),
    }
}

/// All `rows x cols` matrices over a finite field, indexed so that index order
/// is the lexicographic order of the row-major entries.
pub struct MatrixSpace<E> {
    elements: Vec<E>,
    rows: usize,
    cols: usize,
    size: u64,
}

impl<E: Clone + Eq> MatrixSpace<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize, cap: u64) -> Result<Self> {
        let elements = f.elements()?;
        let size = check_cap(elements.len() as u64, rows * cols, cap)?;
        Ok(Self {
            elements,
            rows,
            cols,
            size,
        })
    }

    pub fn len(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn get(&self, mut index: u64) -> Matrix<E> {
        let q = self.elements.len() as u64;
        let n = self.rows * self.cols;
        let mut data = vec![self.elements[0].clone(); n];
        for slot in data.iter_mut().rev() {
            *slot = self.elements[(index % q) as usize].clone();
            index /= q;
        }
        Matrix::from_vec(self.rows, self.cols, data)
    }
}

/// All vectors of `F^n`, in lexicographic order.
pub fn vectors<F: Field>(f: &F, n: usize, cap: u64) -> Result<Vec<Vec<F::Elem>>> {
    let space = MatrixSpace::new(f, 1, n, cap)?;
    Ok((0..space.len()).map(|i| space.get(i).row(0).to_vec()).collect())
}

/// One representative per line of `F^n`: nonzero vectors whose first nonzero
/// coordinate is 1.
pub fn projective_points<F: Field>(f: &F, n: usize, cap: u64) -> Result<Vec<Vec<F::Elem>>> {
    Ok(vectors(f, n, cap)?
        .into_iter()
        .filter(|v| v.iter().find(|x| !f.is_zero(x)).is_some_and(|x| f.is_one(x)))
        .collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every subspace of `F^n`, each once, ordered by dimension, then pivot set,
/// then free entries.
pub fn subspaces<F: Field>(f: &F, n: usize, cap: u64) -> Result<Vec<Subspace<F::Elem>>> {
    let elements = f.elements()?;
    let q = elements.len() as u64;
    let mut out = vec![Subspace::zero(n)];
    for k in 1..=n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| {
                    let pivots = &pivots;
                    ((p + 1)..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let count = check_cap(q, free.len(), cap)?;
            for mut idx in 0..count {
                let mut m = Matrix::zeros(f, k, n);
                for (r, &p) in pivots.iter().enumerate() {
                    m[(r, p)] = f.one();
                }
                for &(r, c) in free.iter().rev() {
                    m[(r, c)] = elements[(idx % q) as usize].clone();
                    idx /= q;
                }
                out.push(Subspace::from_rows_unreduced(f, m));
            }
        }
    }
    Ok(out)
}
