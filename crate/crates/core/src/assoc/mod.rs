//! Dissections of convex polygons as faces of the Stasheff associahedron.
//!
//! Faces are indexed by dissections of an `n`-gon (`n ≥ 3`), so the polytope
//! for the `n`-gon has dimension `n - 3`. In the classical notation this is
//! `K_{n-1}`: the tile of the tessellation of the moduli space of `n` points
//! is the polytope of the `n`-gon, and the arity-`k` component of the A∞
//! operad is the polytope of the `(k + 1)`-gon.

mod dissection;
mod graft;
mod poset;

pub use dissection::{all_diagonals, crosses, is_diagonal, normalize, Diagonal, Dissection};
pub use graft::{face_dim, graft};
pub use poset::{
    all_dissections, enumerate_dissections, f_vector, face_covers, flip, flip_graph, FacePoset,
    FlipGraph,
};
