//! Row-major arrays of field symbols with a per-symbol erasure mask.

use crate::ring::RingElem;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeArray {
    rows: usize,
    cols: usize,
    symbols: Vec<u8>,
    erased: Vec<bool>,
}

impl CodeArray {
    pub fn zero(rows: usize, cols: usize) -> Self {
        CodeArray {
            rows,
            cols,
            symbols: vec![0; rows * cols],
            erased: vec![false; rows * cols],
        }
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut a = CodeArray::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row {i}");
            for (j, &v) in row.iter().enumerate() {
                a.set(i, j, v);
            }
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn idx(&self, r: usize, c: usize) -> usize {
        debug_assert!(r < self.rows && c < self.cols);
        r * self.cols + c
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.symbols[self.idx(r, c)]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        let i = self.idx(r, c);
        self.symbols[i] = v;
    }

    #[inline]
    pub fn is_erased(&self, r: usize, c: usize) -> bool {
        self.erased[self.idx(r, c)]
    }

    pub fn erase(&mut self, r: usize, c: usize) {
        let i = self.idx(r, c);
        self.erased[i] = true;
        self.symbols[i] = 0;
    }

    pub fn clear_erasure(&mut self, r: usize, c: usize) {
        let i = self.idx(r, c);
        self.erased[i] = false;
    }

    pub fn erase_column(&mut self, c: usize) {
        for r in 0..self.rows {
            self.erase(r, c);
        }
    }

    pub fn has_erasures(&self) -> bool {
        self.erased.iter().any(|&e| e)
    }

    pub fn erasure_count(&self) -> usize {
        self.erased.iter().filter(|&&e| e).count()
    }

    /// Columns in which every symbol is erased.
    pub fn fully_erased_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| (0..self.rows).all(|r| self.is_erased(r, c)))
            .collect()
    }

    /// Columns containing at least one erased symbol.
    pub fn columns_with_erasures(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| (0..self.rows).any(|r| self.is_erased(r, c)))
            .collect()
    }

    pub fn column(&self, c: usize) -> RingElem {
        RingElem::from_coeffs((0..self.rows).map(|r| self.get(r, c)).collect())
    }

    pub fn column_erasures(&self, c: usize) -> Vec<bool> {
        (0..self.rows).map(|r| self.is_erased(r, c)).collect()
    }

    /// Writes a full column and clears its erasure flags.
    pub fn set_column(&mut self, c: usize, v: &RingElem) -> Result<()> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        for r in 0..self.rows {
            self.set(r, c, v.coeff(r));
            self.clear_erasure(r, c);
        }
        Ok(())
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    /// Indices of nonzero columns.
    pub fn column_support(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| (0..self.rows).any(|r| self.get(r, c) != 0))
            .collect()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erasure_bookkeeping() {
        let mut a = CodeArray::zero(3, 4);
        a.set(1, 2, 5);
        assert_eq!(a.get(1, 2), 5);
        a.erase_column(2);
        assert_eq!(a.get(1, 2), 0);
        assert_eq!(a.fully_erased_columns(), vec![2]);
        a.erase(0, 0);
        assert_eq!(a.columns_with_erasures(), vec![0, 2]);
        a.set_column(2, &RingElem::from_coeffs(vec![1, 2, 3])).unwrap();
        assert_eq!(a.fully_erased_columns(), Vec::<usize>::new());
        assert_eq!(a.column(2).coeffs(), &[1, 2, 3]);
    }

    #[test]
    fn support_and_weight() {
        let a = CodeArray::from_rows(&[&[1, 0, 0], &[0, 0, 2]]);
        assert_eq!(a.weight(), 2);
        assert_eq!(a.column_support(), vec![0, 2]);
    }
}
