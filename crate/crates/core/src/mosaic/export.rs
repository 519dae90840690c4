use std::fmt::Write;

use serde::Serialize;

use super::complex::CellComplex;

#[derive(Debug, Serialize)]
pub struct ComplexJson {
    pub n: usize,
    pub cells: Vec<CellJson>,
    pub boundary: Vec<BoundaryJson>,
}

#[derive(Debug, Serialize)]
pub struct CellJson {
    pub id: usize,
    pub dim: usize,
    pub labels: Vec<usize>,
    pub diagonals: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize)]
pub struct BoundaryJson {
    pub cell: usize,
    pub faces: Vec<[usize; 2]>,
}

pub fn complex_json(complex: &CellComplex) -> ComplexJson {
    let mut cells = Vec::with_capacity(complex.total_cells());
    let mut boundary = Vec::new();
    for dim in 0..=complex.top_dim() {
        for (idx, cell) in complex.cells(dim).iter().enumerate() {
            let id = complex.global_id(dim, idx);
            let rep = cell.representative();
            cells.push(CellJson {
                id,
                dim,
                labels: rep.labels(),
                diagonals: rep.diagonals().map(|(a, b)| [a, b]).collect(),
            });
            if dim > 0 {
                boundary.push(BoundaryJson {
                    cell: id,
                    faces: complex
                        .boundary(dim, idx)
                        .iter()
                        .map(|&(f, m)| [complex.global_id(dim - 1, f), m as usize])
                        .collect(),
                });
            }
        }
    }
    ComplexJson {
        n: complex.n(),
        cells,
        boundary,
    }
}

/// Vertices and edges of the complex. Vertex names are global cell ids.
pub fn one_skeleton_dot(complex: &CellComplex) -> String {
    let mut out = format!("graph m0{}_1skeleton {{\n", complex.n());
    for idx in 0..complex.cells(0).len() {
        let _ = writeln!(out, "  v{};", complex.global_id(0, idx));
    }
    if complex.top_dim() >= 1 {
        for idx in 0..complex.cells(1).len() {
            let (t, h) = complex.edge_endpoints(idx);
            let _ = writeln!(
                out,
                "  v{} -- v{} [label=\"e{}\"];",
                complex.global_id(0, t),
                complex.global_id(0, h),
                complex.global_id(1, idx)
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Top cells joined through their shared codimension-one cells.
pub fn dual_graph_dot(complex: &CellComplex) -> String {
    let top = complex.top_dim();
    let mut out = format!("graph m0{}_dual {{\n", complex.n());
    for idx in 0..complex.cells(top).len() {
        let _ = writeln!(out, "  c{};", complex.global_id(top, idx));
    }
    if top >= 1 {
        let mut cofaces: Vec<Vec<usize>> = vec![Vec::new(); complex.cells(top - 1).len()];
        for idx in 0..complex.cells(top).len() {
            for &(f, m) in complex.boundary(top, idx) {
                for _ in 0..m {
                    cofaces[f].push(idx);
                }
            }
        }
        for (f, cs) in cofaces.iter().enumerate() {
            for pair in cs.windows(2) {
                let _ = writeln!(
                    out,
                    "  c{} -- c{} [label=\"f{}\"];",
                    complex.global_id(top, pair[0]),
                    complex.global_id(top, pair[1]),
                    complex.global_id(top - 1, f)
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
