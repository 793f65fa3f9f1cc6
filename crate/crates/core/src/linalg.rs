//! Exact dense linear algebra over the Gaussian rationals.
//!
//! Gauss–Jordan elimination with exact division; used for kernel-of-d and the
//! metric constraint solver. Sizes stay small (a few hundred rows), so a
//! dense representation is fine.

use num_traits::Zero;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![Scalar::zero(); cols]; rows] }
    }

    pub fn from_rows(data: Vec<Vec<Scalar>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r][c] = v;
    }

    /// Reduces self to reduced row echelon form in place; returns the pivot
    /// column of each pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| !self.data[r][col].is_zero()) else {
                continue;
            };
            self.data.swap(row, pivot_row);
            let inv = self.data[row][col].clone();
            for c in col..self.cols {
                let v = self.data[row][c].clone() / inv.clone();
                self.data[row][c] = v;
            }
            for r in 0..self.rows {
                if r != row && !self.data[r][col].is_zero() {
                    let factor = self.data[r][col].clone();
                    for c in col..self.cols {
                        let delta = factor.clone() * self.data[row][c].clone();
                        self.data[r][c] = self.data[r][c].clone() - delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the right nullspace {v : M v = 0}.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<usize> = pivots.clone();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = num_traits::One::one();
            for (row, &pc) in pivot_set.iter().enumerate() {
                v[pc] = -m.data[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .map(|(a, b)| a.clone() * b.clone())
                    .fold(Scalar::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// Row space membership: true iff v is a linear combination of the rows.
    pub fn row_space_contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut m = self.clone();
        let base_rank = m.rref().len();
        let mut extended = self.clone();
        extended.data.push(v.to_vec());
        extended.rows += 1;
        extended.rref().len() == base_rank
    }
}

/// True iff the two row sets span the same subspace.
pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>], cols: usize) -> bool {
    let ma = Matrix::from_rows(if a.is_empty() { vec![vec![Scalar::zero(); cols]] } else { a.to_vec() });
    let mb = Matrix::from_rows(if b.is_empty() { vec![vec![Scalar::zero(); cols]] } else { b.to_vec() });
    if ma.rank() != mb.rank() {
        return false;
    }
    b.iter().all(|v| ma.row_space_contains(v)) && a.iter().all(|v| mb.row_space_contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{from_int, from_ratio};

    #[test]
    fn solves_a_known_nullspace() {
        // x + 2y + 3z = 0, 2x + 4y + 6z = 0 -> rank 1, nullity 2.
        let m = Matrix::from_rows(vec![
            vec![from_int(1), from_int(2), from_int(3)],
            vec![from_int(2), from_int(4), from_int(6)],
        ]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let m = Matrix::from_rows(vec![
            vec![from_int(1), from_int(1)],
            vec![from_int(1), from_int(-1)],
        ]);
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn rational_pivoting_is_exact() {
        let m = Matrix::from_rows(vec![
            vec![from_ratio(1, 3), from_ratio(1, 6)],
            vec![from_int(2), from_int(1)],
        ]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn span_comparison() {
        let a = vec![vec![from_int(1), from_int(0)], vec![from_int(0), from_int(1)]];
        let b = vec![vec![from_int(1), from_int(1)], vec![from_int(1), from_int(-1)]];
        assert!(same_span(&a, &b, 2));
        let c = vec![vec![from_int(1), from_int(1)]];
        assert!(!same_span(&a, &c, 2));
    }
}
