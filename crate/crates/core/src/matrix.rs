//! Small dense matrices over an exact field.

use std::fmt;
use std::ops::Mul;

use crate::field::Scalar;

#[derive(Clone, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: PartialEq> PartialEq for Matrix<K> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<K: Scalar> Matrix<K> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize, like: &K) -> Self {
        Matrix::from_fn(rows, cols, |_, _| like.zero_in())
    }

    pub fn identity(n: usize, like: &K) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { like.one_in() } else { like.zero_in() })
    }

    /// Hankel matrix with entry `(i, j) = seq[i + j]`.
    pub fn hankel(n: usize, seq: &[K]) -> Self {
        assert!(seq.len() + 1 >= 2 * n, "hankel sequence too short");
        Matrix::from_fn(n, n, |i, j| seq[i + j].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// First entry where `self` and `other` differ, if any.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((self.rows.min(other.rows), self.cols.min(other.cols)));
        }
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
    }

    fn like(&self) -> K {
        self.data
            .iter()
            .find(|c| c.field_name().is_some())
            .or(self.data.first())
            .cloned()
            .unwrap_or_else(K::one)
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> K {
        assert!(self.is_square(), "determinant of non-square matrix");
        let like = self.like();
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = like.one_in();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return like.zero_in();
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = a[c * n + c].clone();
            det = det * pivot.clone();
            let pinv = pivot.inv().expect("nonzero pivot");
            for r in c + 1..n {
                let factor = a[r * n + c].clone() * pinv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    a[r * n + j] = a[r * n + j].clone() - factor.clone() * a[c * n + j].clone();
                }
            }
        }
        det
    }

    /// Gauss-Jordan on `[self | rhs]`; `None` if `self` is singular.
    fn gauss_jordan(&self, rhs: &Matrix<K>) -> Option<Matrix<K>> {
        assert!(self.is_square() && rhs.rows == self.rows);
        let n = self.rows;
        let m = rhs.cols;
        let w = n + m;
        let mut a: Vec<K> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend_from_slice(self.row(i));
            a.extend_from_slice(rhs.row(i));
        }
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r * w + c].is_zero())?;
            if p != c {
                for j in 0..w {
                    a.swap(p * w + j, c * w + j);
                }
            }
            let pinv = a[c * w + c].inv().expect("nonzero pivot");
            for j in c..w {
                a[c * w + j] = a[c * w + j].clone() * pinv.clone();
            }
            for r in 0..n {
                if r == c || a[r * w + c].is_zero() {
                    continue;
                }
                let factor = a[r * w + c].clone();
                for j in c..w {
                    a[r * w + j] = a[r * w + j].clone() - factor.clone() * a[c * w + j].clone();
                }
            }
        }
        Some(Matrix::from_fn(n, m, |i, j| a[i * w + n + j].clone()))
    }

    pub fn inverse(&self) -> Option<Self> {
        let like = self.like();
        self.gauss_jordan(&Matrix::identity(self.rows, &like))
    }

    /// Solve `self * x = b`.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        let rhs = Matrix::from_fn(b.len(), 1, |i, _| b[i].clone());
        self.gauss_jordan(&rhs).map(|x| x.column(0))
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        let like = self.like();
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(like.zero_in(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// `self * m * self^T`.
    pub fn congruence(&self, m: &Matrix<K>) -> Matrix<K> {
        &(self * m) * &self.transpose()
    }

    pub fn block_diagonal(blocks: &[Matrix<K>], like: &K) -> Matrix<K> {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(n, n, like);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.rows;
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hcat(blocks: &[Matrix<K>]) -> Matrix<K> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows));
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                data.extend_from_slice(b.row(i));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<K: Scalar> Mul for &Matrix<K> {
    type Output = Matrix<K>;
    fn mul(self, rhs: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let like = self.like();
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(like.zero_in(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        })
    }
}

impl<K: Scalar> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[ ")?;
            for j in 0..self.cols {
                write!(f, "{:>width$} ", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
