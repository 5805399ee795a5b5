//! Sparse exact Gaussian elimination over the rationals.
//!
//! Columns are monomials sorted descending in a term order, so the pivot of
//! a row is its leading monomial and the reduced row echelon form of a
//! spanning set is the reduced Gröbner-style basis of the spanned space.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Row as `(column, coefficient)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

/// `row - factor * pivot`, both sorted by column.
fn sub_scaled(row: &[(usize, Scalar)], factor: &Scalar, pivot: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                let v = &a.1 - factor * &b.1;
                if !v.is_zero() {
                    out.push((a.0, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a.0 < b.0 => {
                out.push(a.clone());
                i += 1;
            }
            (Some(_), Some(b)) | (None, Some(b)) => {
                out.push((b.0, -(factor * &b.1)));
                j += 1;
            }
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn coefficient_at(row: &[(usize, Scalar)], col: usize) -> Option<&Scalar> {
    row.binary_search_by(|e| e.0.cmp(&col))
        .ok()
        .map(|k| &row[k].1)
}

/// Incremental echelon form; pivots are kept monic and reduced against the
/// pivots present when they were inserted.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Reduce `row` against the current pivots at every position.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut idx = 0;
        while idx < row.len() {
            let col = row[idx].0;
            match self.pivots.get(&col) {
                Some(p) => {
                    let factor = row[idx].1.clone();
                    row = sub_scaled(&row, &factor, p);
                }
                None => idx += 1,
            }
        }
        row
    }

    /// Insert a row; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let mut row = self.reduce(row);
        let (lead, c) = row.first()?.clone();
        if !c.is_one() {
            let inv = c.recip();
            for e in row.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        self.pivots.insert(lead, row);
        Some(lead)
    }

    /// Reduced row echelon form, rows sorted by pivot column.
    pub fn into_reduced(self) -> Vec<SparseRow> {
        let mut cols: Vec<usize> = self.pivots.keys().copied().collect();
        cols.sort_unstable();
        let mut rows: Vec<SparseRow> = {
            let mut pivots = self.pivots;
            cols.iter().map(|c| pivots.remove(c).unwrap()).collect()
        };
        for k in (0..rows.len()).rev() {
            let col = cols[k];
            let (before, after) = rows.split_at_mut(k);
            let pivot = &after[0];
            for row in before.iter_mut() {
                if let Some(f) = coefficient_at(row, col).cloned() {
                    *row = sub_scaled(row, &f, pivot);
                }
            }
        }
        rows
    }
}

/// Reduced row echelon basis of the span of `rows`, in terms of monomials.
///
/// Each returned row is sorted descending by `cmp` and monic; rows are sorted
/// descending by leading monomial.
pub fn reduced_basis<M, F>(rows: Vec<Vec<(M, Scalar)>>, cmp: F) -> Vec<Vec<(M, Scalar)>>
where
    M: Clone + Eq + Hash,
    F: Fn(&M, &M) -> Ordering,
{
    let mut columns: Vec<M> = Vec::new();
    {
        let mut seen = std::collections::HashSet::new();
        for r in &rows {
            for (m, _) in r {
                if seen.insert(m.clone()) {
                    columns.push(m.clone());
                }
            }
        }
    }
    columns.sort_by(|a, b| cmp(b, a));
    let index: HashMap<M, usize> = columns
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut ech = Echelon::new();
    for r in rows {
        let mut sparse: SparseRow = r
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (index[&m], c))
            .collect();
        sparse.sort_by_key(|e| e.0);
        // merge duplicate columns
        let mut merged: SparseRow = Vec::with_capacity(sparse.len());
        for (col, c) in sparse {
            match merged.last_mut() {
                Some(last) if last.0 == col => last.1 += c,
                _ => merged.push((col, c)),
            }
        }
        merged.retain(|e| !e.1.is_zero());
        ech.insert(merged);
    }
    ech.into_reduced()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(c, v)| (columns[c].clone(), v))
                .collect()
        })
        .collect()
}
