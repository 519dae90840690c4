use std::collections::HashMap;

use rayon::prelude::*;

use super::dissection::{all_diagonals, crosses, Diagonal, Dissection};
use crate::error::{Error, Result};

/// All dissections of the `n`-gon with exactly `k` diagonals, in
/// lexicographic order of their sorted diagonal lists.
pub fn enumerate_dissections(n: usize, k: usize) -> Result<Vec<Dissection>> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    if k > n - 3 {
        return Err(Error::DiagonalCountOutOfRange { k, max: n - 3 });
    }
    let candidates = all_diagonals(n);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    extend(&candidates, 0, k, &mut chosen, &mut |ds| {
        out.push(Dissection::from_sorted_unchecked(n, ds.to_vec()))
    });
    Ok(out)
}

fn extend(
    candidates: &[Diagonal],
    from: usize,
    k: usize,
    chosen: &mut Vec<Diagonal>,
    emit: &mut impl FnMut(&[Diagonal]),
) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    let remaining = k - chosen.len();
    for i in from..candidates.len() {
        if candidates.len() - i < remaining {
            break;
        }
        let d = candidates[i];
        if chosen.iter().all(|&e| !crosses(d, e)) {
            chosen.push(d);
            extend(candidates, i + 1, k, chosen, emit);
            chosen.pop();
        }
    }
}

/// Every dissection of the `n`-gon, grouped by diagonal count.
pub fn all_dissections(n: usize) -> Result<Vec<Vec<Dissection>>> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    (0..=n - 3).map(|k| enumerate_dissections(n, k)).collect()
}

/// Face counts of the associahedron indexed by dimension `0..=n-3`.
pub fn f_vector(n: usize) -> Result<Vec<u64>> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    let mut by_dim = vec![0u64; n - 2];
    for k in 0..=n - 3 {
        by_dim[n - 3 - k] = enumerate_dissections(n, k)?.len() as u64;
    }
    Ok(by_dim)
}

/// Faces one dimension down: `face ∪ {d}` for every compatible `d`.
pub fn face_covers(face: &Dissection) -> Vec<Dissection> {
    face.compatible_diagonals()
        .into_iter()
        .map(|d| face.with(d).expect("compatible diagonal"))
        .collect()
}

/// The other triangulation sharing all diagonals of `t` but `d`.
pub fn flip(t: &Dissection, d: Diagonal) -> Result<Dissection> {
    if !t.is_triangulation() {
        return Err(Error::NotTriangulation);
    }
    let rest = t.without(d)?;
    let d = super::dissection::normalize(d);
    let mut others = rest.compatible_diagonals().into_iter().filter(|&e| e != d);
    let e = others.next().expect("a quadrilateral has two diagonals");
    debug_assert!(others.next().is_none());
    rest.with(e)
}

/// Triangulations and the index pairs joined by a single flip.
pub type FlipGraph = (Vec<Dissection>, Vec<(usize, usize)>);

/// The face poset of the associahedron, nodes graded by diagonal count.
#[derive(Debug, Clone)]
pub struct FacePoset {
    pub n: usize,
    /// `levels[k]` holds the dissections with `k` diagonals.
    pub levels: Vec<Vec<Dissection>>,
    /// `covers[k][i]` lists indices into `levels[k + 1]` covering node `i`.
    pub covers: Vec<Vec<Vec<usize>>>,
}

impl FacePoset {
    pub fn build(n: usize) -> Result<Self> {
        let levels = all_dissections(n)?;
        let mut covers = Vec::with_capacity(levels.len());
        for k in 0..levels.len() {
            if k + 1 == levels.len() {
                covers.push(vec![Vec::new(); levels[k].len()]);
                break;
            }
            let index: HashMap<&Dissection, usize> = levels[k + 1]
                .iter()
                .enumerate()
                .map(|(i, d)| (d, i))
                .collect();
            let row = levels[k]
                .par_iter()
                .map(|d| face_covers(d).iter().map(|c| index[c]).collect())
                .collect();
            covers.push(row);
        }
        Ok(Self { n, levels, covers })
    }

    pub fn node_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }
}

/// Triangulations and the flip edges between them (indices into the list,
/// `i < j`, sorted).
pub fn flip_graph(n: usize) -> Result<FlipGraph> {
    let verts = enumerate_dissections(n, n.saturating_sub(3))?;
    let index: HashMap<&Dissection, usize> =
        verts.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut edges = Vec::new();
    for (i, t) in verts.iter().enumerate() {
        for &d in t.diagonals() {
            let j = index[&flip(t, d)?];
            if i < j {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    Ok((verts, edges))
}
