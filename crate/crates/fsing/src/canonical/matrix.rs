//! Rectangular matrices of polynomials: presentations, resolution
//! differentials and syzygies.

use std::fmt;

use crate::arith::poly::Polynomial;
use crate::arith::ring::{check_same_ring, poly_one, poly_zero, Ring};
use crate::error::{Error, Result};

/// Row-major polynomial matrix; all entries share one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch("matrix entry count"));
        }
        for e in &entries {
            check_same_ring(&ring, e.ring())?;
        }
        Ok(PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ring: Ring, rows: usize, cols: usize) -> Self {
        let entries = (0..rows * cols).map(|_| poly_zero(&ring)).collect();
        PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = PolyMatrix::zero(ring.clone(), n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = poly_one(&ring);
        }
        m
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows"));
        }
        PolyMatrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_columns(ring: Ring, rows: usize, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        let cols = columns.len();
        if columns.iter().any(|col| col.len() != rows) {
            return Err(Error::DimensionMismatch("ragged columns"));
        }
        let mut m = PolyMatrix::zero(ring, rows, cols);
        for (c, col) in columns.into_iter().enumerate() {
            for (r, entry) in col.into_iter().enumerate() {
                *m.entry_mut(r, c) = entry;
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub(crate) fn entry_mut(&mut self, r: usize, c: usize) -> &mut Polynomial {
        &mut self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zero(self.ring.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *m.entry_mut(c, r) = self.entry(r, c).clone();
            }
        }
        m
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_same_ring(&self.ring, &other.ring)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("matrix product"));
        }
        let mut m = PolyMatrix::zero(self.ring.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = poly_zero(&self.ring);
                for k in 0..self.cols {
                    acc = &acc + &self.entry(r, k).checked_mul(other.entry(k, c))?;
                }
                *m.entry_mut(r, c) = acc;
            }
        }
        Ok(m)
    }

    /// Applies v as column coefficients: self * v for v a column vector.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector product"));
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = poly_zero(&self.ring);
            for (c, f) in v.iter().enumerate() {
                acc = &acc + &self.entry(r, c).checked_mul(f)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Entrywise p^e-th power.
    pub fn frobenius_entrywise(&self, e: u32) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|f| f.frobenius_power(e))
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(self.ring.clone(), self.rows, self.cols, entries)
    }

    pub(crate) fn delete_row(&mut self, r: usize) {
        let start = r * self.cols;
        self.entries.drain(start..start + self.cols);
        self.rows -= 1;
    }

    pub(crate) fn delete_col(&mut self, c: usize) {
        for r in (0..self.rows).rev() {
            self.entries.remove(r * self.cols + c);
        }
        self.cols -= 1;
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.entry(r, c).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
