//! Dense row-major matrices over an exact field.
//!
//! Everything downstream — subspaces, wedges, radicals — reduces to row
//! echelon computations on these matrices, so this module keeps the
//! invariants tight: every matrix knows its field, and `rows * cols` always
//! equals `entries.len()`, including when one of the dimensions is zero.
//! Shape mismatches panic; they are programming errors, not data errors.

use crate::field::{Field, FieldElem};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    /// An empty row list needs the column count from elsewhere, hence the
    /// explicit parameter.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<FieldElem>>) -> Matrix {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            entries.extend(row);
        }
        Matrix { field, rows: nrows, cols, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        assert!(r < self.rows, "row out of range");
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<FieldElem> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[FieldElem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &*out.get(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Applies the matrix to a coordinate vector (matrix times column).
    pub fn apply(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = &acc + &(a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `self` on top of `other` (column counts must agree).
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Places `other` to the right of `self` (row counts must agree).
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = Matrix::zero(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// In-place Gauss–Jordan elimination to reduced row echelon form.
    /// Returns the pivot columns in increasing order. Zero rows are kept
    /// (the row count never changes); callers that want a basis drop them.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            if lead >= self.rows {
                break;
            }
            // First nonzero entry at or below `lead` serves as the pivot.
            let Some(pr) = (lead..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, pr);
            let inv = self.get(lead, col).inv().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.get(lead, c) * &inv;
                self.set(lead, c, v);
            }
            for r in 0..self.rows {
                if r == lead || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = &*self.get(r, c) - &(&factor * self.get(lead, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse via elimination on `[self | I]`; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zero(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Convenience for tests and builders: integer rows over a given field.
pub fn matrix_from_i64(field: Field, cols: usize, rows: &[&[i64]]) -> Matrix {
    let converted = rows
        .iter()
        .map(|row| row.iter().map(|&v| field.from_i64(v)).collect())
        .collect();
    Matrix::from_rows(field, cols, converted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_normalizes_dependent_rows() {
        let f = Field::Rationals;
        let m = matrix_from_i64(f, 2, &[&[2, 4], &[1, 2]]);
        let (red, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(red, matrix_from_i64(f, 2, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_is_idempotent_and_orders_pivots() {
        let f = Field::Rationals;
        let m = matrix_from_i64(f, 4, &[&[0, 0, 3, 1], &[2, 4, 0, 6], &[2, 4, 3, 7]]);
        let (red, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        let (again, pivots2) = red.rref();
        assert_eq!(red, again);
        assert_eq!(pivots, pivots2);
        // Pivot columns carry exactly one 1.
        for (r, &p) in pivots.iter().enumerate() {
            for row in 0..red.rows() {
                let want = if row == r { f.one() } else { f.zero() };
                assert_eq!(*red.get(row, p), want);
            }
        }
    }

    #[test]
    fn inverse_round_trips() {
        let f = Field::Rationals;
        let m = matrix_from_i64(f, 3, &[&[1, 2, 0], &[0, 1, 4], &[1, 0, 1]]);
        let inv = m.inverse().expect("invertible");
        assert_eq!(m.mul(&inv), Matrix::identity(f, 3));
        assert_eq!(inv.mul(&m), Matrix::identity(f, 3));
        let singular = matrix_from_i64(f, 2, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn prime_field_singularity_depends_on_modulus() {
        // det = 2*3 - 1*1 = 5: invertible over Q, singular over F_5.
        let q = matrix_from_i64(Field::Rationals, 2, &[&[2, 1], &[1, 3]]);
        assert!(q.inverse().is_some());
        let f5 = matrix_from_i64(Field::prime(5).unwrap(), 2, &[&[2, 1], &[1, 3]]);
        assert!(f5.inverse().is_none());
        let f7 = matrix_from_i64(Field::prime(7).unwrap(), 2, &[&[2, 1], &[1, 3]]);
        assert!(f7.inverse().is_some());
    }

    #[test]
    fn zero_dimensional_matrices_are_usable() {
        let f = Field::Rationals;
        let m = Matrix::zero(f, 0, 3);
        let (red, pivots) = m.rref();
        assert_eq!(red.rows(), 0);
        assert!(pivots.is_empty());
        let t = m.transpose();
        assert_eq!((t.rows(), t.cols()), (3, 0));
        let empty = Matrix::zero(f, 0, 0);
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn apply_matches_mul() {
        let f = Field::Rationals;
        let m = matrix_from_i64(f, 3, &[&[1, 2, 3], &[0, 1, 0]]);
        let v = vec![f.from_i64(1), f.from_i64(-1), f.from_i64(2)];
        assert_eq!(m.apply(&v), vec![f.from_i64(5), f.from_i64(-1)]);
    }
}
