//! Operadic structure on mosaic cells.
//!
//! A cell with `k + 1` marks is an operation of arity `k` whose output is
//! the mark `k + 1`. Composition glues the output side of the inner cell
//! onto an input side of the outer one.

use super::complex::{canonicalize, MosaicCell};
use super::marked::{MarkedDissection, MAX_MARKS};
use crate::assoc::Dissection;
use crate::error::{Error, Result};

/// Glues `inner`'s output side (its largest mark) onto the side of `outer`
/// carrying `mark`, on representatives. The glued edge becomes a diagonal.
///
/// Marks of the result: `outer`'s marks below `mark` keep their value,
/// `inner`'s inputs `1..=m` become `mark..mark + m - 1`, and `outer`'s marks
/// above `mark` shift up by `m - 1`.
pub fn compose_marked(
    outer: &MarkedDissection,
    mark: usize,
    inner: &MarkedDissection,
) -> Result<MarkedDissection> {
    let arity = outer.n() - 1;
    if mark == 0 || mark > arity {
        return Err(Error::InvalidMark { mark, max: arity });
    }
    let m = inner.n() - 1;
    let n = outer.n() - 1;
    let total = n + m;
    if total > MAX_MARKS {
        return Err(Error::UnsupportedSize {
            n: total,
            min: 3,
            max: MAX_MARKS,
        });
    }
    // glued sides moved to the last position of each polygon
    let pa = outer.side_of(mark).expect("mark present");
    let a = outer.rotate((pa + 1) % (n + 1));
    let pb = inner.side_of(m + 1).expect("output mark present");
    let b = inner.rotate((pb + 1) % (m + 1));

    let relabel_outer = |l: usize| if l < mark { l } else { l + m - 1 };
    let relabel_inner = |l: usize| mark - 1 + l;

    let mut labels = Vec::with_capacity(total);
    labels.extend((0..n).map(|j| relabel_outer(a.label_at(j))));
    labels.extend((0..m).map(|j| relabel_inner(b.label_at(j))));

    let mut diagonals: Vec<(usize, usize)> = a.diagonals().collect();
    diagonals.extend(
        b.diagonals()
            .map(|(x, y)| ((n + x) % total, (n + y) % total)),
    );
    diagonals.push((0, n));
    MarkedDissection::new(labels, &Dissection::new(total, diagonals)?)
}

pub fn mosaic_compose(outer: &MosaicCell, mark: usize, inner: &MosaicCell) -> Result<MosaicCell> {
    Ok(canonicalize(&compose_marked(
        outer.representative(),
        mark,
        inner.representative(),
    )?))
}

/// Applies a relabeling of marks (`relabel[l - 1]` is the new mark of `l`).
pub fn relabel_cell(cell: &MosaicCell, relabel: &[usize]) -> Result<MosaicCell> {
    Ok(canonicalize(&cell.representative().relabel(relabel)?))
}

/// Advances every mark cyclically: `k ↦ k + 1`, `n ↦ 1`.
pub fn cyclic_rotate(cell: &MosaicCell) -> MosaicCell {
    let n = cell.n();
    let shift: Vec<usize> = (1..=n).map(|k| k % n + 1).collect();
    relabel_cell(cell, &shift).expect("rotation is a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn top(labels: &[usize]) -> MosaicCell {
        let d = Dissection::empty(labels.len()).unwrap();
        canonicalize(&MarkedDissection::new(labels.to_vec(), &d).unwrap())
    }

    #[test]
    fn composing_top_cells_adds_one_diagonal() {
        let a = top(&[1, 2, 3, 4]);
        let b = top(&[1, 2, 3]);
        for mark in 1..=3 {
            let c = mosaic_compose(&a, mark, &b).unwrap();
            assert_eq!(c.n(), 5);
            assert_eq!(c.representative().diagonal_count(), 1);
            assert_eq!(c.dim(), a.dim() + b.dim());
        }
        assert!(mosaic_compose(&a, 4, &b).is_err());
        assert!(mosaic_compose(&a, 0, &b).is_err());
    }

    #[test]
    fn glued_marks_are_relabeled_in_order() {
        // triangle into triangle at mark 1: the diagonal separates {1, 2} from {3, 4}
        let c = compose_marked(
            &MarkedDissection::standard(&Dissection::empty(3).unwrap()).unwrap(),
            1,
            &MarkedDissection::standard(&Dissection::empty(3).unwrap()).unwrap(),
        )
        .unwrap();
        let (x, y) = c.diagonals().next().unwrap();
        let mut side: Vec<usize> = (x..y).map(|j| c.label_at(j)).collect();
        side.sort_unstable();
        assert!(side == vec![1, 2] || side == vec![3, 4]);
    }

    #[test]
    fn rotation_has_order_n() {
        let c = top(&[1, 3, 2, 5, 4]);
        let mut r = c;
        for _ in 0..5 {
            r = cyclic_rotate(&r);
            assert_eq!(r.dim(), c.dim());
        }
        assert_eq!(r, c);
    }
}
