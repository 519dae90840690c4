use serde::{Deserialize, Serialize};

use crate::scalar::IntegerRing;

/// An exact integer matrix stored as sorted sparse rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, T)>>,
}

impl<T: IntegerRing> IntegerMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.entries[i].push((i, T::one()));
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let entries = rows
            .into_iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged matrix");
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect::<Vec<Vec<_>>>();
        Self {
            rows: entries.len(),
            cols,
            entries,
        }
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add.
    pub fn from_triples(
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triples {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of bounds");
            let row = &mut m.entries[r];
            match row.binary_search_by_key(&c, |e| e.0) {
                Ok(at) => {
                    let sum = row[at].1.clone() + v;
                    if sum.is_zero() {
                        row.remove(at);
                    } else {
                        row[at].1 = sum;
                    }
                }
                Err(at) => {
                    if !v.is_zero() {
                        row.insert(at, (c, v));
                    }
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.entries[r]
            .binary_search_by_key(&c, |e| e.0)
            .map(|at| self.entries[r][at].1.clone())
            .unwrap_or_else(|_| T::zero())
    }

    pub fn row(&self, r: usize) -> &[(usize, T)] {
        &self.entries[r]
    }

    pub fn nonzeros(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        (0..self.rows)
            .map(|r| {
                let mut row = vec![T::zero(); self.cols];
                for (c, v) in &self.entries[r] {
                    row[*c] = v.clone();
                }
                row
            })
            .collect()
    }

    pub(crate) fn into_sparse_rows(self) -> Vec<Vec<(usize, T)>> {
        self.entries
    }
}
