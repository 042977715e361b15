//! Dense matrices with `BiPoly` entries and fraction-free elimination.

use super::bipoly::BiPoly;
use super::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![BiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BiPoly::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BiPoly) -> Self {
        let mut m = PolyMatrix::zeros(rows, cols);
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

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BiPoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        PolyMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = BiPoly::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn scale(&self, c: &BiPoly) -> Self {
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).mul(c))
    }

    pub fn transpose(&self) -> Self {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, mut f: impl FnMut(&BiPoly) -> BiPoly) -> Self {
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    /// Matrix with row `i` and column `j` deleted.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        assert!(self.rows > 0 && self.cols > 0);
        PolyMatrix::from_fn(self.rows - 1, self.cols - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self.get(rr, cc).clone()
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting. Every division is exact by the Sylvester identity, so all
    /// intermediate entries stay polynomials (they are minors of the input).
    pub fn det_fraction_free(&self) -> BiPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BiPoly::one();
        }
        let mut a: Vec<Vec<BiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = BiPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BiPoly::zero();
                };
                a.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                a[i][k] = BiPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            det.neg()
        } else {
            det
        }
    }

    /// Adjugate (transposed cofactor matrix): `self * adj = det * identity`.
    pub fn adjugate(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return PolyMatrix::zeros(0, 0);
        }
        if n == 1 {
            return PolyMatrix::identity(1);
        }
        PolyMatrix::from_fn(n, n, |i, j| {
            // adj[i][j] = cofactor_{j,i}
            let c = self.minor(j, i).det_fraction_free();
            if (i + j) % 2 == 0 {
                c
            } else {
                c.neg()
            }
        })
    }

    /// Entry-wise specialization of `u`; the result still has `BiPoly`
    /// entries (now polynomials in `q` alone).
    pub fn substitute_u(&self, u0: &Rational) -> Self {
        self.map(|p| BiPoly::from_q_poly(&p.substitute_u(u0)))
    }
}
