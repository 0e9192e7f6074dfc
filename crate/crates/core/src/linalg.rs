//! Dense Gaussian elimination over GF(2^b).
//!
//! All systems in this crate are small (at most a few hundred unknowns), so a
//! plain row-reduction with field inverses is both sufficient and easy to
//! audit. Used for local column repair, systematic parity precomputation,
//! rank-based MDS checks and the brute-force decode oracles in the tests.

use crate::gf::Field;

/// Row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c);
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// In-place reduction to row echelon form; returns the pivot columns.
    pub fn echelon(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = f.inv(self.at(row, col)).expect("pivot is nonzero");
            if inv != 1 {
                for c in col..self.cols {
                    let v = f.mul(self.at(row, c), inv);
                    self.set(row, c, v);
                }
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    for c in col..self.cols {
                        let v = self.at(r, c) ^ f.mul(factor, self.at(row, c));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(mut self, f: &Field) -> usize {
        self.echelon(f).len()
    }

    /// Basis of the right null space, one vector per row of the result.
    pub fn null_space(mut self, f: &Field) -> Vec<Vec<u8>> {
        let pivots = self.echelon(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u8; self.cols];
            v[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                // pivot rows are normalized, so the pivot entry is 1
                v[pc] = self.at(ri, fc);
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let va = self.at(a, c);
            let vb = self.at(b, c);
            self.set(a, c, vb);
            self.set(b, c, va);
        }
    }
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    Unique(Vec<u8>),
    Underdetermined,
    Inconsistent,
}

/// Solves a linear system by eliminating the augmented matrix.
#[allow(clippy::needless_range_loop)]
pub fn solve(a: &Mat, rhs: &[u8], f: &Field) -> Solve {
    assert_eq!(a.rows, rhs.len());
    let mut aug = Mat::zero(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug.set(r, c, a.at(r, c));
        }
        aug.set(r, a.cols, rhs[r]);
    }
    let pivots = aug.echelon(f);
    if pivots.last() == Some(&a.cols) {
        return Solve::Inconsistent;
    }
    if pivots.len() < a.cols {
        return Solve::Underdetermined;
    }
    let mut x = vec![0u8; a.cols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(ri, a.cols);
    }
    Solve::Unique(x)
}
