use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::gf2::{rank_mod2, BitRow};
use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::mosaic::{CellComplex, MarkedDissection};
use crate::scalar::IntegerRing;

/// Mod-2 Betti numbers `b₀ … b_top`. Fails if a boundary of a boundary is
/// nonzero mod 2.
pub fn betti_mod2(complex: &CellComplex) -> Result<Vec<usize>> {
    let top = complex.top_dim();
    for dim in 2..=top {
        check_boundary_squared(complex, dim)?;
    }
    let ranks: Vec<usize> = (0..=top + 1)
        .into_par_iter()
        .map(|dim| {
            if dim == 0 || dim > top {
                return 0;
            }
            let cols = complex.cells(dim - 1).len();
            let rows = (0..complex.cells(dim).len()).map(|i| {
                let mut r = BitRow::zeros(cols);
                for &(f, m) in complex.boundary(dim, i) {
                    if m % 2 == 1 {
                        r.flip(f);
                    }
                }
                r
            });
            rank_mod2(rows, cols)
        })
        .collect();
    Ok((0..=top)
        .map(|d| complex.cells(d).len() - ranks[d] - ranks[d + 1])
        .collect())
}

fn check_boundary_squared(complex: &CellComplex, dim: usize) -> Result<()> {
    let width = complex.cells(dim - 2).len();
    let bad = (0..complex.cells(dim).len()).into_par_iter().any(|i| {
        let mut acc = BitRow::zeros(width);
        for &(f, m) in complex.boundary(dim, i) {
            if m % 2 == 0 {
                continue;
            }
            for &(g, k) in complex.boundary(dim - 1, f) {
                if k % 2 == 1 {
                    acc.flip(g);
                }
            }
        }
        !acc.is_zero()
    });
    if bad {
        Err(Error::BoundaryNotClosed(dim))
    } else {
        Ok(())
    }
}

/// Is the directed copy-edge `edge` (completed at its tail by `tail`) aligned
/// with the stored orientation of its quotient edge? Tracks the group element
/// carrying `edge` to the canonical representative by transporting `tail`
/// alongside it.
fn copy_edge_sign(
    complex: &CellComplex,
    edge: &MarkedDissection,
    tail: &MarkedDissection,
) -> Result<i64> {
    let (dim, idx) = complex.locate(edge).ok_or(Error::UnknownCell {
        dim: 1,
        cell: usize::MAX,
    })?;
    debug_assert_eq!(dim, 1);
    let rep = complex.cells(1)[idx].representative();
    let completions = rep.dissection().compatible_diagonals();
    let forward = rep.with(completions[0])?.key();
    let backward = rep.with(completions[1])?.key();

    let start = (edge.normalized(), tail.normalized());
    let mut seen: HashSet<(u128, u128)> = HashSet::new();
    seen.insert((start.0.key(), start.1.key()));
    let mut queue = VecDeque::from([start]);
    let (mut hits_forward, mut hits_backward) = (false, false);
    while let Some((e, t)) = queue.pop_front() {
        if e.key() == rep.key() {
            let k = t.key();
            hits_forward |= k == forward;
            hits_backward |= k == backward;
        }
        for d in e.diagonals() {
            let ne = e.twist(d)?.normalized();
            let nt = t.twist(d)?.normalized();
            if seen.insert((ne.key(), nt.key())) {
                queue.push_back((ne, nt));
            }
        }
    }
    match (hits_forward, hits_backward) {
        (true, false) => Ok(1),
        (false, true) => Ok(-1),
        _ => Err(Error::Folding { dim: 1, cell: idx }),
    }
}

/// Boundary words of the 2-cells over the 1-cells: letter `±(e + 1)` walks
/// edge `e` along or against its orientation. Each word traverses the
/// boundary polygon of the cell's representative associahedron face.
pub fn attaching_words(complex: &CellComplex) -> Result<Vec<Vec<i64>>> {
    if complex.top_dim() < 2 {
        return Ok(Vec::new());
    }
    complex
        .cells(2)
        .par_iter()
        .map(|cell| {
            let rep = cell.representative();
            let sides = rep.dissection().compatible_diagonals();
            let adjacent =
                |x: (usize, usize), y: (usize, usize)| x != y && !crate::assoc::crosses(x, y);
            let mut cycle = vec![sides[0]];
            let mut prev = None;
            let mut cur = sides[0];
            loop {
                let next = sides
                    .iter()
                    .copied()
                    .filter(|&s| adjacent(cur, s) && Some(s) != prev)
                    .min()
                    .expect("2-faces are polygons");
                if next == sides[0] {
                    break;
                }
                cycle.push(next);
                prev = Some(cur);
                cur = next;
            }
            let len = cycle.len();
            let mut word = Vec::with_capacity(len);
            for i in 0..len {
                let edge = rep.with(cycle[i])?;
                let tail = edge.with(cycle[(i + len - 1) % len])?;
                let (_, e) = complex.locate(&edge).expect("edge in complex");
                let sign = copy_edge_sign(complex, &edge, &tail)?;
                word.push(sign * (e as i64 + 1));
            }
            Ok(word)
        })
        .collect()
}

/// How the spanning tree of the 1-skeleton is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeChoice {
    /// Breadth-first from the least 0-cell, neighbors in edge order.
    Bfs,
    /// Breadth-first from a random root with shuffled neighbor order.
    Random(u64),
}

/// Edge indices of a spanning tree of the 1-skeleton.
pub fn spanning_tree(complex: &CellComplex, choice: TreeChoice) -> Result<Vec<bool>> {
    let verts = complex.cells(0).len();
    let edges = if complex.top_dim() >= 1 {
        complex.cells(1).len()
    } else {
        0
    };
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts];
    for e in 0..edges {
        let (t, h) = complex.edge_endpoints(e);
        adj[t].push((h, e));
        adj[h].push((t, e));
    }
    let mut root = 0;
    if let TreeChoice::Random(seed) = choice {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for list in adj.iter_mut() {
            list.shuffle(&mut rng);
        }
        root = rng.gen_range(0..verts);
    }
    let mut in_tree = vec![false; edges];
    let mut visited = vec![false; verts];
    visited[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v] {
            if !visited[w] {
                visited[w] = true;
                in_tree[e] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    if reached != verts {
        return Err(Error::Disconnected);
    }
    Ok(in_tree)
}

/// A finite presentation: generators `1..=generators`, relators as signed
/// generator indices.
#[derive(Debug, Clone, Serialize)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relations: Vec<Vec<i64>>,
    pub relation_matrix: IntegerMatrix<i64>,
    /// For each generator, the 1-cell it came from.
    pub generator_edges: Vec<usize>,
}

impl GroupPresentation {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "generators: {}\nrelations: {}\n",
            self.generators,
            self.relations.len()
        );
        for word in &self.relations {
            let letters: Vec<String> = word
                .iter()
                .map(|&l| {
                    if l > 0 {
                        format!("x{l}")
                    } else {
                        format!("x{}^-1", -l)
                    }
                })
                .collect();
            if letters.is_empty() {
                out.push_str("1\n");
            } else {
                out.push_str(&letters.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

/// Presentation of the fundamental group read off the 2-skeleton: one
/// generator per edge outside the spanning tree, one relator per 2-cell.
pub fn pi1_presentation(complex: &CellComplex, choice: TreeChoice) -> Result<GroupPresentation> {
    let in_tree = spanning_tree(complex, choice)?;
    let mut generator_of = vec![0i64; in_tree.len()];
    let mut generator_edges = Vec::new();
    for (e, &t) in in_tree.iter().enumerate() {
        if !t {
            generator_edges.push(e);
            generator_of[e] = generator_edges.len() as i64;
        }
    }
    let words = attaching_words(complex)?;
    let relations: Vec<Vec<i64>> = words
        .iter()
        .map(|w| {
            w.iter()
                .filter_map(|&l| {
                    let g = generator_of[(l.unsigned_abs() - 1) as usize];
                    (g != 0).then_some(l.signum() * g)
                })
                .collect()
        })
        .collect();
    let triples = relations.iter().enumerate().flat_map(|(r, w)| {
        w.iter()
            .map(move |&l| (r, (l.unsigned_abs() - 1) as usize, l.signum()))
    });
    let relation_matrix =
        IntegerMatrix::from_triples(relations.len(), generator_edges.len(), triples);
    Ok(GroupPresentation {
        generators: generator_edges.len(),
        relations,
        relation_matrix,
        generator_edges,
    })
}

/// A finitely generated abelian group `ℤ^rank ⊕ ⨁ ℤ/dᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup<T> {
    pub rank: usize,
    pub torsion: Vec<T>,
}

impl<T: IntegerRing + fmt::Display> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(format!("Z^{}", self.rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Abelianization of a presentation.
pub fn abelianize(p: &GroupPresentation) -> AbelianGroup<i64> {
    let snf = smith_normal_form(&p.relation_matrix);
    AbelianGroup {
        rank: p.generators - snf.rank,
        torsion: snf
            .invariant_factors
            .into_iter()
            .filter(|d| *d > 1)
            .collect(),
    }
}

pub fn h1(complex: &CellComplex) -> Result<AbelianGroup<i64>> {
    h1_with_tree(complex, TreeChoice::Bfs)
}

pub fn h1_with_tree(complex: &CellComplex, choice: TreeChoice) -> Result<AbelianGroup<i64>> {
    Ok(abelianize(&pi1_presentation(complex, choice)?))
}
