//! Dense exact linear algebra over `Rational`: elimination, kernels, and the
//! pseudoinverse solve on the complement of the all-ones kernel.

use super::rational::Rational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("right-hand side is outside the range of the Laplacian (component sum {0} != 0)")]
    NotInRange(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = RatMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        RatMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += a * other.get(k, j);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (k, vk) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * vk;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.get(row, col).clone().recip();
            for j in 0..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i != row && !m.get(i, col).is_zero() {
                    let f = m.get(i, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &f * m.get(row, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column, in column
    /// order (deterministic).
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b` for square nonsingular `self`; `None` if the
    /// matrix is singular.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.len());
        let n = self.rows;
        let mut aug = RatMatrix::from_fn(n, n + 1, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        for col in 0..n {
            let p = (col..n).find(|&i| !aug.get(i, col).is_zero())?;
            if p != col {
                for j in 0..=n {
                    let a = aug.get(col, j).clone();
                    let bb = aug.get(p, j).clone();
                    aug.set(col, j, bb);
                    aug.set(p, j, a);
                }
            }
            let inv = aug.get(col, col).clone().recip();
            for j in col..=n {
                let v = aug.get(col, j) * &inv;
                aug.set(col, j, v);
            }
            for i in 0..n {
                if i != col && !aug.get(i, col).is_zero() {
                    let f = aug.get(i, col).clone();
                    for j in col..=n {
                        let v = aug.get(i, j) - &f * aug.get(col, j);
                        aug.set(i, j, v);
                    }
                }
            }
        }
        Some((0..n).map(|i| aug.get(i, n).clone()).collect())
    }

    /// Exact determinant by Gaussian elimination over the field.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(col, j, b);
                    m.set(p, j, a);
                }
                det = -det;
            }
            det *= m.get(col, col);
            let inv = m.get(col, col).clone().recip();
            for i in col + 1..n {
                if !m.get(i, col).is_zero() {
                    let f = m.get(i, col) * &inv;
                    for j in col..n {
                        let v = m.get(i, j) - &f * m.get(col, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }
}

/// Solves `lap * x = b` with `sum x = 0`, i.e. applies the Moore-Penrose
/// pseudoinverse of a connected-graph Laplacian. Errors with `NotInRange`
/// when `sum b != 0` (b outside the range of `lap`).
///
/// Uses the rank-correction identity: `K = lap + (1/n) * ones` is
/// nonsingular, and for `sum b = 0` the solution of `K x = b` satisfies
/// `sum x = 0` and `lap x = b`.
pub fn solve_on_complement(lap: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>, SolveError> {
    assert_eq!(lap.rows(), lap.cols());
    assert_eq!(lap.rows(), b.len());
    let total: Rational = b.iter().cloned().sum();
    if !total.is_zero() {
        return Err(SolveError::NotInRange(total.to_string()));
    }
    let n = lap.rows();
    let share = Rational::new(1.into(), (n as i64).into());
    let k = RatMatrix::from_fn(n, n, |i, j| lap.get(i, j) + &share);
    let x = k
        .solve(b)
        .expect("Laplacian of a connected graph plus rank-one correction is nonsingular");
    debug_assert_eq!(lap.mul_vec(&x), b.to_vec());
    Ok(x)
}
