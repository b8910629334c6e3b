use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use super::Rational;
use crate::{Error, Result};

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    /// Build from rows. Every row must have the same nonzero length and there
    /// must be at least one row.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidArgument("matrix needs at least one row".into()));
        };
        let cols = first.len();
        if cols == 0 {
            return Err(Error::InvalidArgument("matrix needs at least one column".into()));
        }
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Reduced row-echelon form. Returns the nonzero rows and their pivot columns.
fn rref(rows: &[Vec<Rational>], cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_of_rows(rows: &[Vec<Rational>], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

pub fn rank(m: &Matrix) -> usize {
    rank_of_rows(&m.to_rows(), m.cols)
}

/// Kernel basis of the matrix with the given rows, one vector per free
/// column: the vector has 1 at its free column, 0 at the other free columns.
pub fn kernel_of_rows(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(rows, cols);
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Canonical basis of the right kernel `{x : m x = 0}`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    kernel_of_rows(&m.to_rows(), m.cols)
}

/// Number of affinely independent points among `points`, i.e. affine
/// dimension plus one (0 for the empty set).
pub fn affine_rank(points: &[&[Rational]]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    1 + rank_of_rows(&diffs, first.len())
}

#[cfg(test)]
mod tests {
    use super::super::{dot, int};
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&m(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 0, 0]])), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&m(&[&[1, 1]])), [[int(-1), int(1)]]);
        let k = kernel_basis(&m(&[&[0, 1, 0, 1], &[0, 0, 1, 1], &[1, 1, 1, 1]]));
        assert_eq!(k, [[int(1), int(-1), int(-1), int(1)]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(vec![vec![int(1)], vec![int(1), int(2)]]).is_err());
        assert!(Matrix::from_rows(vec![]).is_err());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len() + rank(&a), 4);
        for v in &k {
            for i in 0..a.rows() {
                assert!(dot(a.row(i), v).is_zero());
            }
        }
    }
}
