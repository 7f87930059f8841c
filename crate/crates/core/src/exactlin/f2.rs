use alloc::vec::Vec;

/// Largest row count accepted by [`F2Matrix::row_space_members`].
pub const MAX_ENUMERATION_ROWS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum F2Error {
    #[error("matrix has {cols} columns; at most 64 are supported")]
    TooManyColumns { cols: usize },
    #[error("row-space enumeration limited to {max} rows, got {rows}")]
    TooManyRows { rows: usize, max: usize },
}

/// Matrix over the two-element field. Each row is a bit mask; bit `j` is column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<u64>,
}

impl F2Matrix {
    pub fn new(cols: usize, rows: Vec<u64>) -> Result<Self, F2Error> {
        if cols > 64 {
            return Err(F2Error::TooManyColumns { cols });
        }
        let mask = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
        Ok(F2Matrix { cols, rows: rows.into_iter().map(|r| r & mask).collect() })
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Reduced row-echelon form with zero rows dropped. Pivots are taken at the
    /// lowest set bit, so the result is a canonical basis of the row space.
    pub fn rref(&self) -> F2Matrix {
        let mut rows = self.rows.clone();
        let mut out: Vec<u64> = Vec::new();
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(p) = rows.iter().position(|r| r & bit != 0) else {
                continue;
            };
            let pivot = rows.swap_remove(p);
            for r in rows.iter_mut().chain(out.iter_mut()) {
                if *r & bit != 0 {
                    *r ^= pivot;
                }
            }
            out.push(pivot);
        }
        F2Matrix { cols: self.cols, rows: out }
    }

    pub fn rank(&self) -> usize {
        self.rref().rows.len()
    }

    /// Every vector of the row space, `2^rank` of them.
    pub fn row_space_members(&self) -> Result<Vec<u64>, F2Error> {
        if self.rows.len() > MAX_ENUMERATION_ROWS {
            return Err(F2Error::TooManyRows { rows: self.rows.len(), max: MAX_ENUMERATION_ROWS });
        }
        let basis = self.rref().rows;
        Ok(span(&basis))
    }
}

/// All `F2`-linear combinations of `basis` (assumed independent), in Gray-code order.
pub(crate) fn span(basis: &[u64]) -> Vec<u64> {
    let n = 1usize << basis.len();
    let mut out = Vec::with_capacity(n);
    let mut cur = 0u64;
    out.push(cur);
    for k in 1..n {
        cur ^= basis[k.trailing_zeros() as usize];
        out.push(cur);
    }
    out
}
