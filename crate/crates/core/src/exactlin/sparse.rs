use alloc::vec;
use alloc::vec::Vec;

use crate::rational::Rational;

/// Sparse rational vector: strictly increasing indices, no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::one())] }
    }

    /// From arbitrary `(index, value)` pairs; duplicates are summed.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut v: Vec<(usize, Rational)> = pairs.into_iter().collect();
        v.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(v.len());
        for (i, x) in v {
            match entries.last_mut() {
                Some((j, y)) if *j == i => *y += &x,
                _ => entries.push((i, x)),
            }
        }
        entries.retain(|(_, x)| !x.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(dense: &[Rational]) -> Self {
        SparseVec {
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    /// Collects the nonzero entries of a dense accumulator, resetting it to zero.
    pub fn drain_dense(acc: &mut [Rational]) -> Self {
        let mut entries = Vec::new();
        for (i, x) in acc.iter_mut().enumerate() {
            if !x.is_zero() {
                entries.push((i, core::mem::take(x)));
            }
        }
        SparseVec { entries }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut d = vec![Rational::zero(); len];
        for (i, x) in &self.entries {
            d[*i] = x.clone();
        }
        d
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, s: &Rational) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * s)).collect() }
    }

    /// `self + s * other`
    pub fn axpy(&self, s: &Rational, other: &SparseVec) -> SparseVec {
        if s.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, s * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + &(s * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Rational::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-Rational::one(), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = Rational::zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    acc += &(&a[i].1 * &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }
}

/// Outcome of adding one equation to a [`SparseSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pushed {
    /// The equation raised the rank.
    NewPivot,
    /// The equation was a consequence of earlier ones.
    Redundant,
    /// The equation contradicts earlier ones.
    Inconsistent,
}

/// Incremental sparse Gaussian elimination for `A x = b`, fed one equation at a time.
#[derive(Debug, Clone)]
pub struct SparseSystem {
    unknowns: usize,
    // pivot column -> (row with leading coefficient 1 at that column, rhs)
    pivot_rows: Vec<Option<(SparseVec, Rational)>>,
    rank: usize,
}

impl SparseSystem {
    pub fn new(unknowns: usize) -> Self {
        SparseSystem { unknowns, pivot_rows: vec![None; unknowns], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank == self.unknowns
    }

    pub fn push(&mut self, row: SparseVec, rhs: Rational) -> Pushed {
        let (mut row, mut rhs) = (row, rhs);
        let mut start = 0;
        loop {
            let next = row.entries()[start..]
                .iter()
                .position(|(c, _)| self.pivot_rows[*c].is_some())
                .map(|p| p + start);
            let Some(pos) = next else { break };
            let (col, coef) = row.entries()[pos].clone();
            let (prow, prhs) = self.pivot_rows[col].as_ref().expect("pivot");
            let neg = -coef;
            rhs += &(&neg * prhs);
            row = row.axpy(&neg, prow);
            // everything left of `col` is untouched; `col` itself is gone
            start = row.entries().partition_point(|(c, _)| *c < col);
        }
        match row.entries().first() {
            None if rhs.is_zero() => Pushed::Redundant,
            None => Pushed::Inconsistent,
            Some((col, lead)) => {
                let col = *col;
                let inv = lead.recip();
                self.pivot_rows[col] = Some((row.scale(&inv), &rhs * &inv));
                self.rank += 1;
                Pushed::NewPivot
            }
        }
    }

    /// The unique solution, if the system has full column rank.
    pub fn solve_unique(&self) -> Option<Vec<Rational>> {
        if !self.is_full_rank() {
            return None;
        }
        let mut x = vec![Rational::zero(); self.unknowns];
        for col in (0..self.unknowns).rev() {
            let (row, rhs) = self.pivot_rows[col].as_ref()?;
            let mut v = rhs.clone();
            for (j, a) in row.iter().skip(1) {
                if !x[j].is_zero() {
                    v -= &(a * &x[j]);
                }
            }
            x[col] = v;
        }
        Some(x)
    }
}

/// Rank of a family of sparse vectors in `ℚ^cols`.
pub fn sparse_rank(cols: usize, rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut sys = SparseSystem::new(cols);
    for r in rows {
        sys.push(r, Rational::zero());
        if sys.is_full_rank() {
            break;
        }
    }
    sys.rank()
}
