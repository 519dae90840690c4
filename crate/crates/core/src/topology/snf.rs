//! Smith normal form over a Euclidean integer type.
//!
//! Unit pivots are eliminated sparsely first (each contributes an invariant
//! factor `1`); the leftover block, which carries all the torsion, is
//! reduced densely with minimal-absolute-value pivoting.

use std::collections::BTreeSet;

use serde::Serialize;

use super::matrix::IntegerMatrix;
use crate::scalar::IntegerRing;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithForm<T> {
    /// Nonzero invariant factors `d₁ | d₂ | …`, all positive.
    pub invariant_factors: Vec<T>,
    pub rank: usize,
}

pub fn smith_normal_form<T: IntegerRing>(m: &IntegerMatrix<T>) -> SmithForm<T> {
    let cols = m.cols();
    let (units, rest) = eliminate_units(m.clone().into_sparse_rows(), cols);
    let mut factors = vec![T::one(); units];
    factors.extend(dense_invariant_factors(rest));
    let rank = factors.len();
    SmithForm {
        invariant_factors: factors,
        rank,
    }
}

fn is_unit<T: IntegerRing>(v: &T) -> bool {
    v.abs().is_one()
}

/// Returns the number of unit pivots removed and the remaining dense block.
fn eliminate_units<T: IntegerRing>(
    mut rows: Vec<Vec<(usize, T)>>,
    cols: usize,
) -> (usize, Vec<Vec<T>>) {
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].insert(r);
        }
    }
    let mut alive = vec![true; rows.len()];
    let mut units = 0;

    loop {
        // Markowitz-style choice among unit entries
        let mut best: Option<(usize, usize, usize)> = None;
        'search: for (r, row) in rows.iter().enumerate() {
            if !alive[r] {
                continue;
            }
            for (c, v) in row {
                if is_unit(v) {
                    let cost = (row.len() - 1) * (col_rows[*c].len() - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, r, *c));
                        if cost == 0 {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };

        let pivot_row = std::mem::take(&mut rows[pr]);
        let pivot = pivot_row
            .iter()
            .find(|e| e.0 == pc)
            .expect("pivot entry")
            .1
            .clone();
        for (c, _) in &pivot_row {
            col_rows[*c].remove(&pr);
        }
        alive[pr] = false;
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for r in targets {
            let a = rows[r]
                .iter()
                .find(|e| e.0 == pc)
                .expect("entry in column")
                .1
                .clone();
            // pivot is ±1, so its inverse is itself
            let factor = a * pivot.clone();
            let old = std::mem::take(&mut rows[r]);
            let updated = axpy(&old, &pivot_row, &factor);
            for (c, _) in &old {
                col_rows[*c].remove(&r);
            }
            for (c, _) in &updated {
                col_rows[*c].insert(r);
            }
            rows[r] = updated;
        }
        debug_assert!(col_rows[pc].is_empty());
        units += 1;
    }

    let live_rows: Vec<usize> = (0..rows.len())
        .filter(|&r| alive[r] && !rows[r].is_empty())
        .collect();
    let live_cols: Vec<usize> = (0..cols).filter(|&c| !col_rows[c].is_empty()).collect();
    let mut col_pos = vec![usize::MAX; cols];
    for (i, &c) in live_cols.iter().enumerate() {
        col_pos[c] = i;
    }
    let dense = live_rows
        .iter()
        .map(|&r| {
            let mut row = vec![T::zero(); live_cols.len()];
            for (c, v) in &rows[r] {
                row[col_pos[*c]] = v.clone();
            }
            row
        })
        .collect();
    (units, dense)
}

/// `row - factor * pivot_row`, merged over sorted supports.
fn axpy<T: IntegerRing>(
    row: &[(usize, T)],
    pivot_row: &[(usize, T)],
    factor: &T,
) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot_row.len() {
        let take_row = j == pivot_row.len() || (i < row.len() && row[i].0 < pivot_row[j].0);
        let take_pivot = i == row.len() || (j < pivot_row.len() && pivot_row[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            out.push((pivot_row[j].0, -(factor.clone() * pivot_row[j].1.clone())));
            j += 1;
        } else {
            let v = row[i].1.clone() - factor.clone() * pivot_row[j].1.clone();
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn dense_invariant_factors<T: IntegerRing>(mut a: Vec<Vec<T>>) -> Vec<T> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                return finish(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..cols {
                    let v = a[t][j].clone();
                    a[i][j] = a[i][j].clone() - q.clone() * v;
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for i in t..rows {
                    let v = a[i][t].clone();
                    a[i][j] = a[i][j].clone() - q.clone() * v;
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] = a[t][j].clone() + v;
                    }
                }
                None => {
                    diag.push(p.abs());
                    break;
                }
            }
        }
    }
    finish(diag)
}

fn min_abs_entry<T: IntegerRing>(a: &[Vec<T>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|b| abs < b.0) {
                let one = abs.is_one();
                best = Some((abs, i, j));
                if one {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Restores the divisibility chain on a diagonal (gcd/lcm exchange).
fn finish<T: IntegerRing>(mut diag: Vec<T>) -> Vec<T> {
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (x, y) = (diag[i].clone(), diag[j].clone());
            let g = x.gcd(&y);
            if g != x {
                diag[i] = g.clone();
                diag[j] = x * y / g;
            }
        }
    }
    diag
}
