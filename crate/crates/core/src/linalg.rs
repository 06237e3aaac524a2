//! Dense linear algebra over a coefficient field: rank, kernels, determinants.

use crate::field::{Coeff, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Coeff>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Coeff>], cols: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Coeff) {
        self.data[i * self.cols + j] = c;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !field.is_zero(self.get(r, col))) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(row * self.cols + j, p * self.cols + j);
            }
            let inv = field.inv(self.get(row, col)).unwrap();
            for j in 0..self.cols {
                let v = field.mul(self.get(row, j), &inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || field.is_zero(self.get(r, col)) {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in 0..self.cols {
                    let v = field.sub(self.get(r, j), &field.mul(&factor, self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis of `{v : A v = 0}`.
    pub fn kernel(&self, field: &Field) -> Vec<Vec<Coeff>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![field.zero(); self.cols];
                v[f] = field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = field.neg(m.get(r, f));
                }
                v
            })
            .collect()
    }

    pub fn det(&self, field: &Field) -> Coeff {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !field.is_zero(m.get(r, col))) else {
                return field.zero();
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(col * n + j, p * n + j);
                }
                det = field.neg(&det);
            }
            let pivot = m.get(col, col).clone();
            det = field.mul(&det, &pivot);
            let inv = field.inv(&pivot).unwrap();
            for r in col + 1..n {
                let factor = field.mul(m.get(r, col), &inv);
                if field.is_zero(&factor) {
                    continue;
                }
                for j in col..n {
                    let v = field.sub(m.get(r, j), &field.mul(&factor, m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }
}
