//! Cells of the real moduli space of `n` marked points as marked dissections
//! modulo dihedral relabeling and twists, the tessellation by associahedra,
//! the mosaic operad, and the cross-ratio.

mod complex;
mod compose;
mod cross_ratio;
mod export;
mod marked;

pub use complex::{
    boundary_faces, canonicalize, copy_labelings, enumerate_cells, euler_characteristic,
    expected_cell_count, tessellation_map, CellComplex, MosaicCell, MAX_ENUMERATION,
};
pub use compose::{compose_marked, cyclic_rotate, mosaic_compose, relabel_cell};
pub use cross_ratio::{cross_ratio, Mobius, ProjectivePoint};
pub use export::{complex_json, dual_graph_dot, one_skeleton_dot, ComplexJson};
pub use marked::{CellKey, MarkedDissection, MAX_MARKS};
