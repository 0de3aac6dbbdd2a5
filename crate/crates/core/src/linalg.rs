//! Sparse exact Gaussian elimination over the rationals.
//!
//! Rows are sparse maps from column index to coefficient. The pivot of a row is
//! its smallest column, so callers control which coordinates are eliminated
//! first by choosing the column numbering.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::rational::Q;

pub type SparseRow = BTreeMap<usize, Q>;

/// Incrementally built row-echelon basis of a subspace.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<SparseRow>,
    pivot_of: HashMap<usize, usize>,
}

fn axpy(target: &mut SparseRow, factor: &Q, source: &SparseRow) {
    for (col, value) in source {
        let delta = factor * value;
        let entry = target.entry(*col).or_insert_with(Q::zero);
        *entry += delta;
        if entry.is_zero() {
            target.remove(col);
        }
    }
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Pivot columns of the stored rows, in insertion order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| *r.keys().next().expect("stored rows are nonzero"))
    }

    /// Reduces `row` against the stored pivots. With `full` every column is
    /// reduced, otherwise elimination stops at the first column without a pivot.
    pub fn reduce(&self, mut row: SparseRow, full: bool) -> SparseRow {
        let mut cursor = 0usize;
        loop {
            let next = row.range(cursor..).next().map(|(c, v)| (*c, v.clone()));
            let Some((col, value)) = next else { break };
            match self.pivot_of.get(&col) {
                Some(&idx) => {
                    let factor = -value;
                    axpy(&mut row, &factor, &self.rows[idx]);
                }
                None if !full => break,
                None => {}
            }
            cursor = col + 1;
        }
        row
    }

    /// Adds a row to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row, false);
        let Some((&pivot, lead)) = row.iter().next() else {
            return false;
        };
        let inv = Q::one() / lead.clone();
        for value in row.values_mut() {
            *value *= &inv;
        }
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone(), true).is_empty()
    }

    /// Fully reduced row-echelon form, rows sorted by pivot column.
    pub fn into_rref(self) -> Vec<SparseRow> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| *self.rows[i].keys().next().unwrap());
        // back-substitute from the last pivot upwards
        let mut result: Vec<SparseRow> = Vec::with_capacity(order.len());
        let mut done = EchelonBasis::new();
        for &i in order.iter().rev() {
            let row = done.reduce(self.rows[i].clone(), true);
            let mut row_full = row;
            // the pivot itself never has a pivot among later rows
            let pivot = *self.rows[i].keys().next().unwrap();
            debug_assert!(row_full.contains_key(&pivot));
            let inv = Q::one() / row_full[&pivot].clone();
            for value in row_full.values_mut() {
                *value *= &inv;
            }
            done.pivot_of.insert(pivot, done.rows.len());
            done.rows.push(row_full.clone());
            result.push(row_full);
        }
        result.reverse();
        result
    }
}

/// Rank of a family of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut basis = EchelonBasis::new();
    for row in rows {
        basis.insert(row);
    }
    basis.rank()
}

/// Basis of `{ x : row · x = 0 for every row }` in a space with `ncols` coordinates.
pub fn nullspace(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<SparseRow> {
    let mut basis = EchelonBasis::new();
    for row in rows {
        basis.insert(row);
    }
    let rref = basis.into_rref();
    let pivots: Vec<usize> = rref.iter().map(|r| *r.keys().next().unwrap()).collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = SparseRow::new();
        v.insert(free, Q::one());
        for (row, &p) in rref.iter().zip(&pivots) {
            if let Some(coef) = row.get(&free) {
                v.insert(p, -coef.clone());
            }
        }
        out.push(v);
    }
    out
}
