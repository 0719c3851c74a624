//! Exact dense linear algebra over GF(p^k): row reduction, rank, null spaces
//! and small inverses. No pivot-magnitude concerns arise in an exact field;
//! pivots are chosen as the first nonzero entry in row-major scan so every
//! certificate is deterministic.

use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(spec: &FieldSpec, rows: usize, cols: usize, data: Vec<FieldElement>) -> Matrix {
        assert_eq!(rows * cols, data.len());
        Matrix {
            spec: spec.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(spec: &FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            spec: spec.clone(),
            rows,
            cols,
            data: vec![spec.zero(); rows * cols],
        }
    }

    pub fn identity(spec: &FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(spec, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = spec.one();
        }
        m
    }

    pub fn from_rows(spec: &FieldSpec, rows: &[Vec<FieldElement>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix::new(spec, rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElement {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(&self.spec, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.spec.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.spec.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.spec, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// Reduced row echelon form plus pivot columns. Pivot rule: first nonzero
    /// entry in row-major scan of the remaining block.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut pivot_row = None;
            for r in row..m.rows {
                if !m.at(r, col).is_zero() {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.at(pr, c).clone();
                    let b = m.at(row, c).clone();
                    *m.at_mut(pr, c) = b;
                    *m.at_mut(row, c) = a;
                }
            }
            let inv = m.at(row, col).inv().expect("pivot nonzero");
            for c in 0..m.cols {
                *m.at_mut(row, c) = m.at(row, c).mul(&inv);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in 0..m.cols {
                        let sub = factor.mul(m.at(row, c));
                        *m.at_mut(r, c) = m.at(r, c).sub(&sub);
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

    /// Basis of the right null space in the standard form induced by the
    /// reduced echelon form: one vector per free column, deterministic.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![self.spec.zero(); self.cols];
            v[free] = self.spec.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.at(i, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, None if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.spec, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = self.spec.one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut out = Matrix::zeros(&self.spec, n, n);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = r.at(i, n + j).clone();
            }
        }
        Some(out)
    }

    pub fn det(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols);
        // elimination without normalizing pivots, tracking swaps
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.spec.one();
        for col in 0..n {
            let mut pivot_row = None;
            for r in col..n {
                if !m.at(r, col).is_zero() {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else {
                return self.spec.zero();
            };
            if pr != col {
                for c in 0..n {
                    let a = m.at(pr, c).clone();
                    let b = m.at(col, c).clone();
                    *m.at_mut(pr, c) = b;
                    *m.at_mut(col, c) = a;
                }
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().unwrap();
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).mul(&inv);
                for c in col..n {
                    let sub = factor.mul(m.at(col, c));
                    *m.at_mut(r, c) = m.at(r, c).sub(&sub);
                }
            }
        }
        det
    }
}
