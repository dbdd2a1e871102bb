//! Dense bit-packed matrices over GF(2).
//!
//! Rows are stored as [`BitVec`]s. Sizes stay small (a few hundred columns at
//! most), so plain Gaussian elimination on packed limbs is all that is needed
//! for rank, reduced row echelon form, nullspaces and determinants.

use crate::bits::BitVec;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct BinMatrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl BinMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        BinMatrix {
            rows: vec![BitVec::zero(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BinMatrix::zero(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        BinMatrix { rows, cols }
    }

    pub fn from_bits(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        BinMatrix::from_rows(
            rows.iter()
                .map(|r| BitVec::from_bools(&r.iter().map(|&b| b == 1).collect::<Vec<_>>()))
                .collect(),
            cols,
        )
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut t = BinMatrix::zero(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in 0..self.cols {
                if row.get(j) {
                    t.rows[j].set(i, true);
                }
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != other.n_rows() {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.n_rows(), self.cols),
                right: format!("{}x{}", other.n_rows(), other.n_cols()),
            });
        }
        let mut out = BinMatrix::zero(self.n_rows(), other.n_cols());
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = BitVec::zero(other.n_cols());
            for k in 0..self.cols {
                if row.get(k) {
                    acc.xor_assign(other.row(k));
                }
            }
            out.rows[i] = acc;
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &BinMatrix) -> BinMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in stack");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        BinMatrix::from_rows(rows, self.cols)
    }

    /// Reduced row echelon form; unique per row space, with zero rows dropped.
    pub fn rref(&self) -> BinMatrix {
        let mut rows = self.rows.clone();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(pivot_row, found);
            let pivot = rows[pivot_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != pivot_row && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivot_row += 1;
            if pivot_row == rows.len() {
                break;
            }
        }
        rows.truncate(pivot_row);
        BinMatrix::from_rows(rows, self.cols)
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        self.rref().n_rows()
    }

    /// Rows form a basis of the right nullspace {v : M v^T = 0}.
    /// Row count is cols - rank.
    pub fn nullspace(&self) -> BinMatrix {
        let r = self.rref();
        let mut pivot_of_col = vec![None; self.cols];
        let mut pivots = Vec::new();
        for (i, row) in r.rows.iter().enumerate() {
            let col = (0..self.cols).find(|&c| row.get(c)).expect("nonzero row");
            pivot_of_col[col] = Some(i);
            pivots.push(col);
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| pivot_of_col[*c].is_none()) {
            let mut v = BitVec::zero(self.cols);
            v.set(free, true);
            for (&pc, row) in pivots.iter().zip(r.rows.iter()) {
                if row.get(free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        BinMatrix::from_rows(basis, self.cols)
    }

    /// Determinant over GF(2): 1 iff full rank. The empty 0x0 matrix has
    /// determinant 1.
    pub fn det(&self) -> Result<bool> {
        if self.n_rows() != self.cols {
            return Err(Error::NonSquare {
                rows: self.n_rows(),
                cols: self.cols,
            });
        }
        Ok(self.rank() == self.cols)
    }

    /// Row-space equality via shared reduced echelon form.
    pub fn same_row_space(&self, other: &BinMatrix) -> bool {
        self.cols == other.cols && self.rref() == other.rref()
    }
}

impl std::fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}
