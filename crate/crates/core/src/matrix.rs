//! Small dense matrices over exact rationals.
//!
//! Used for morphism pairs (r, s), invertibility tests, and changes of basis.

use crate::error::CoreError;
use crate::scalar::Rat;
use crate::space::Vector;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>, // row major
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, CoreError> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(CoreError::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.data[i * self.cols + j] = value;
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, CoreError> {
        if self.cols != other.rows {
            return Err(CoreError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + &add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vec<Rat>, CoreError> {
        if self.cols != v.coeffs().len() {
            return Err(CoreError::DimensionMismatch("matrix * vector".into()));
        }
        let mut out = vec![Rat::zero(); self.rows];
        for i in 0..self.rows {
            for (j, c) in v.nonzero() {
                out[i] += self.get(i, j) * c;
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            // find a pivot
            let pivot = (rank..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            let inv = m.get(rank, col).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(rank, j) * &inv;
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                if r != rank && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(r, j) - &(&factor * m.get(rank, j));
                        m.set(r, j, v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, CoreError> {
        if self.rows != self.cols {
            return Err(CoreError::SingularMatrix);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else {
                return Err(CoreError::SingularMatrix);
            };
            m.swap_rows(col, p);
            inv.swap_rows(col, p);
            let scale = m.get(col, col).inv()?;
            for j in 0..n {
                let a = m.get(col, j) * &scale;
                m.set(col, j, a);
                let b = inv.get(col, j) * &scale;
                inv.set(col, j, b);
            }
            for r in 0..n {
                if r != col && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..n {
                        let a = m.get(r, j) - &(&factor * m.get(col, j));
                        m.set(r, j, a);
                        let b = inv.get(r, j) - &(&factor * inv.get(col, j));
                        inv.set(r, j, b);
                    }
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}
