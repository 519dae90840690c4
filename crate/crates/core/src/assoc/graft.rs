//! A∞ composition on dissected polygons.
//!
//! A polygon with `k` sides is read as an operation of arity `k - 1`: its
//! marked (output) side is the last side, joining vertex `k - 1` to vertex
//! `0`, and input slot `i` is side `i - 1`.

use super::dissection::{Diagonal, Dissection};
use crate::error::{Error, Result};

/// Glues the marked side of `inner` onto slot `slot` of `outer`. The glued
/// edge becomes a diagonal of the result; the result keeps `outer`'s marked
/// side and its input slots run through `outer`'s slots before `slot`, then
/// `inner`'s slots, then the rest of `outer`'s.
pub fn graft(outer: &Dissection, slot: usize, inner: &Dissection) -> Result<Dissection> {
    let arity = outer.n() - 1;
    if slot == 0 || slot > arity {
        return Err(Error::SlotOutOfRange { slot, max: arity });
    }
    let m = inner.n() - 1; // inner arity
    let n = outer.n() + inner.n() - 2;
    let outer_vertex = |v: usize| if v < slot { v } else { v + m - 1 };
    let inner_vertex = |v: usize| slot - 1 + v;
    let mut diagonals: Vec<Diagonal> = outer
        .diagonals()
        .iter()
        .map(|&(a, b)| (outer_vertex(a), outer_vertex(b)))
        .chain(
            inner
                .diagonals()
                .iter()
                .map(|&(a, b)| (inner_vertex(a), inner_vertex(b))),
        )
        .collect();
    diagonals.push((slot - 1, slot - 1 + m));
    Dissection::new(n, diagonals)
}

/// Dimension of the associahedron face.
pub fn face_dim(d: &Dissection) -> usize {
    d.dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_make_a_square() {
        let t = Dissection::empty(3).unwrap();
        assert_eq!(
            graft(&t, 1, &t).unwrap(),
            Dissection::new(4, vec![(0, 2)]).unwrap()
        );
        assert_eq!(
            graft(&t, 2, &t).unwrap(),
            Dissection::new(4, vec![(1, 3)]).unwrap()
        );
        assert!(graft(&t, 3, &t).is_err());
        assert!(graft(&t, 0, &t).is_err());
    }

    #[test]
    fn dimension_adds() {
        let p = Dissection::new(5, vec![(0, 2)]).unwrap();
        let q = Dissection::empty(4).unwrap();
        for slot in 1..=4 {
            let r = graft(&p, slot, &q).unwrap();
            assert_eq!(r.n(), 7);
            assert_eq!(r.len(), p.len() + q.len() + 1);
            assert_eq!(face_dim(&r), face_dim(&p) + face_dim(&q));
        }
    }
}
