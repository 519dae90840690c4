use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::marked::{CellKey, MarkedDissection, MAX_MARKS};
use crate::assoc::{enumerate_dissections, Dissection};
use crate::braid::Permutation;
use crate::error::{Error, Result};

/// Largest `n` enumerated without an explicit override.
pub const MAX_ENUMERATION: usize = 8;

/// A cell of the real moduli space: the class of a marked dissection under
/// dihedral relabeling and twists, stored through its least representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MosaicCell {
    canonical: MarkedDissection,
}

impl MosaicCell {
    pub fn representative(&self) -> &MarkedDissection {
        &self.canonical
    }

    pub fn key(&self) -> CellKey {
        self.canonical.key()
    }

    pub fn n(&self) -> usize {
        self.canonical.n()
    }

    pub fn dim(&self) -> usize {
        self.canonical.dim()
    }
}

pub fn canonicalize(m: &MarkedDissection) -> MosaicCell {
    MosaicCell {
        canonical: m.canonical(),
    }
}

/// The cell hit by the associahedron face `face` in the copy labeled by `g`
/// (side `j` carries mark `g(j + 1)`).
pub fn tessellation_map(g: &Permutation, face: &Dissection) -> Result<MosaicCell> {
    if g.len() != face.n() {
        return Err(Error::SizeMismatch {
            left: g.len(),
            right: face.n(),
        });
    }
    Ok(canonicalize(&MarkedDissection::new(
        g.to_one_based(),
        face,
    )?))
}

/// Labels with mark 1 on side 0 and side 1 carrying a smaller mark than
/// side `n - 1`: one per associahedron copy, i.e. per coset of the dihedral
/// group in the symmetric group.
pub fn copy_labelings(n: usize) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = (2..=n).collect();
    let mut out = Vec::new();
    loop {
        if rest.first() < rest.last() || rest.len() < 2 {
            let mut labels = Vec::with_capacity(n);
            labels.push(1);
            labels.extend_from_slice(&rest);
            out.push(labels);
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len())
        .rev()
        .find(|&j| v[j] > v[i])
        .expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The cell complex of the real moduli space of `n` marked points.
#[derive(Debug, Clone)]
pub struct CellComplex {
    n: usize,
    cells: Vec<Vec<MosaicCell>>,
    boundary: Vec<Vec<Vec<(usize, u32)>>>,
    lookup: HashMap<CellKey, u32>,
}

/// Enumerates the complex for `3 ≤ n ≤ 8`.
pub fn enumerate_cells(n: usize) -> Result<CellComplex> {
    if !(3..=MAX_ENUMERATION).contains(&n) {
        return Err(Error::UnsupportedSize {
            n,
            min: 3,
            max: MAX_ENUMERATION,
        });
    }
    CellComplex::build(n)
}

impl CellComplex {
    /// Enumerates the complex with no range guard beyond the encoding limit.
    pub fn build(n: usize) -> Result<Self> {
        if !(3..=MAX_MARKS).contains(&n) {
            return Err(Error::UnsupportedSize {
                n,
                min: 3,
                max: MAX_MARKS,
            });
        }
        let top = n - 3;
        let labelings = copy_labelings(n);
        let mut lookup: HashMap<CellKey, u32> = HashMap::new();
        let mut cells: Vec<Vec<MosaicCell>> = vec![Vec::new(); top + 1];

        for codim in 0..=top {
            let dim = top - codim;
            let faces = enumerate_dissections(n, codim)?;
            let mut found: Vec<(MarkedDissection, Vec<CellKey>)> = Vec::new();
            for labels in &labelings {
                for face in &faces {
                    let seed = MarkedDissection::new(labels.clone(), face)?;
                    if lookup.contains_key(&seed.key()) {
                        continue;
                    }
                    let orbit = seed.orbit();
                    if orbit.len() != 1 << codim {
                        return Err(Error::Folding {
                            dim,
                            cell: found.len(),
                        });
                    }
                    let keys: Vec<CellKey> = orbit.iter().map(MarkedDissection::key).collect();
                    let least = *orbit.iter().min_by_key(|m| m.key()).expect("nonempty");
                    for &k in &keys {
                        lookup.insert(k, u32::MAX);
                    }
                    found.push((least, keys));
                }
            }
            found.sort_by_key(|(m, _)| m.key());
            for (idx, (least, keys)) in found.into_iter().enumerate() {
                for k in keys {
                    lookup.insert(k, idx as u32);
                }
                cells[dim].push(MosaicCell { canonical: least });
            }
        }

        let mut complex = Self {
            n,
            cells,
            boundary: Vec::new(),
            lookup,
        };
        complex.boundary = (0..=top)
            .map(|dim| {
                if dim == 0 {
                    return vec![Vec::new(); complex.cells[0].len()];
                }
                complex.cells[dim]
                    .par_iter()
                    .map(|cell| complex.faces_of(cell.representative()))
                    .collect()
            })
            .collect();
        Ok(complex)
    }

    /// Codimension-one faces of the associahedron face carried by `rep`,
    /// tallied by the cell they land in.
    fn faces_of(&self, rep: &MarkedDissection) -> Vec<(usize, u32)> {
        let mut tally: Vec<(usize, u32)> = Vec::new();
        for d in rep.dissection().compatible_diagonals() {
            let face = rep.with(d).expect("compatible");
            let idx = self.lookup[&face.normalized().key()] as usize;
            match tally.iter_mut().find(|(f, _)| *f == idx) {
                Some(entry) => entry.1 += 1,
                None => tally.push((idx, 1)),
            }
        }
        tally.sort_unstable();
        tally
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top_dim(&self) -> usize {
        self.n - 3
    }

    pub fn cells(&self, dim: usize) -> &[MosaicCell] {
        self.cells.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Cell counts indexed by dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Boundary of cell `idx` in dimension `dim`: indices into dimension
    /// `dim - 1` with incidence multiplicities.
    pub fn boundary(&self, dim: usize, idx: usize) -> &[(usize, u32)] {
        &self.boundary[dim][idx]
    }

    /// Dimension and index of the cell containing `m`.
    pub fn locate(&self, m: &MarkedDissection) -> Option<(usize, usize)> {
        if m.n() != self.n {
            return None;
        }
        self.lookup
            .get(&m.normalized().key())
            .map(|&i| (m.dim(), i as usize))
    }

    pub fn index_of(&self, cell: &MosaicCell) -> Result<usize> {
        let dim = cell.dim();
        self.cells(dim)
            .binary_search_by_key(&cell.key(), MosaicCell::key)
            .map_err(|_| Error::UnknownCell {
                dim,
                cell: usize::MAX,
            })
    }

    /// Per cell in `dim`, the total multiplicity with which it appears in the
    /// boundaries of cells of dimension `dim + 1`.
    pub fn coface_totals(&self, dim: usize) -> Vec<u32> {
        let mut totals = vec![0; self.cells(dim).len()];
        if let Some(up) = self.boundary.get(dim + 1) {
            for faces in up {
                for &(f, m) in faces {
                    totals[f] += m;
                }
            }
        }
        totals
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, c)| {
                if d % 2 == 0 {
                    c.len() as i64
                } else {
                    -(c.len() as i64)
                }
            })
            .sum()
    }

    /// Global identifier: cells numbered by dimension, then canonical order.
    pub fn global_id(&self, dim: usize, idx: usize) -> usize {
        self.cells[..dim].iter().map(Vec::len).sum::<usize>() + idx
    }

    /// Endpoints of the edge `idx` as `(tail, head)` vertex indices: the
    /// vertices reached by completing its representative with the smaller and
    /// the larger compatible diagonal respectively.
    pub fn edge_endpoints(&self, idx: usize) -> (usize, usize) {
        let rep = self.cells[1][idx].representative();
        let ds = rep.dissection().compatible_diagonals();
        debug_assert_eq!(ds.len(), 2);
        let end = |d| self.lookup[&rep.with(d).expect("compatible").normalized().key()] as usize;
        (end(ds[0]), end(ds[1]))
    }
}

/// Euler characteristic of the enumerated complex.
pub fn euler_characteristic(n: usize) -> Result<i64> {
    Ok(enumerate_cells(n)?.euler_characteristic())
}

pub fn boundary_faces(cell: &MosaicCell, complex: &CellComplex) -> Result<Vec<(MosaicCell, u32)>> {
    let dim = cell.dim();
    let idx = complex.index_of(cell)?;
    if dim == 0 {
        return Ok(Vec::new());
    }
    Ok(complex
        .boundary(dim, idx)
        .iter()
        .map(|&(f, m)| (complex.cells(dim - 1)[f], m))
        .collect())
}

/// `((n-1)!/2) · D(n, codim) / 2^codim` with `D` supplied by the caller.
pub fn expected_cell_count(n: usize, codim: usize, dissections: u64) -> u64 {
    ((factorial(n - 1) / 2) * dissections) >> codim
}
