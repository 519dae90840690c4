//! Concrete operads for the law checker.

use crate::assoc::Dissection;
use crate::braid::{braids_equal, cable, BraidWord};
use crate::error::{Error, Result};
use crate::mosaic::{canonicalize, enumerate_cells, mosaic_compose, MarkedDissection, MosaicCell};

use super::axioms::{CheckBounds, Operad};

/// Braids under cabling: arity is the strand count.
pub struct BraidOperad;

impl Operad for BraidOperad {
    type Op = BraidWord;

    fn name(&self) -> String {
        "braid".to_string()
    }

    fn arity(&self, op: &BraidWord) -> usize {
        op.strands()
    }

    fn compose(&self, outer: &BraidWord, inners: &[BraidWord]) -> Result<BraidWord> {
        cable(outer, inners)
    }

    fn unit(&self) -> Option<BraidWord> {
        Some(BraidWord::identity(1))
    }

    fn equal(&self, a: &BraidWord, b: &BraidWord) -> bool {
        braids_equal(a, b).unwrap_or(false)
    }
}

/// All braid words on `strands` strands with at most `max_len` letters.
pub fn braid_words_up_to(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![BraidWord::identity(strands)];
    let mut frontier = vec![Vec::<i32>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &a in &alphabet {
                let mut v = w.clone();
                v.push(a);
                out.push(BraidWord::new(strands, v.clone()).expect("letters in range"));
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

/// Mosaic cells: a cell on `k + 1` marks has arity `k`, mark `k + 1` being
/// the output. There is no unit (a 2-gon is not a cell), so composition is
/// only partial.
pub struct MosaicOperad;

impl Operad for MosaicOperad {
    type Op = MosaicCell;

    fn name(&self) -> String {
        "mosaic".to_string()
    }

    fn arity(&self, op: &MosaicCell) -> usize {
        op.n() - 1
    }

    fn compose(&self, outer: &MosaicCell, inners: &[MosaicCell]) -> Result<MosaicCell> {
        let arity = self.arity(outer);
        if inners.len() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: inners.len(),
            });
        }
        // right to left keeps the earlier slot numbers stable
        inners
            .iter()
            .enumerate()
            .rev()
            .try_fold(*outer, |acc, (i, g)| mosaic_compose(&acc, i + 1, g))
    }

    fn compose_at(
        &self,
        outer: &MosaicCell,
        slot: usize,
        inner: &MosaicCell,
    ) -> Result<MosaicCell> {
        mosaic_compose(outer, slot, inner)
    }

    fn unit(&self) -> Option<MosaicCell> {
        None
    }

    fn equal(&self, a: &MosaicCell, b: &MosaicCell) -> bool {
        a == b
    }
}

/// Braid operands for the exhaustive law check: outers on up to
/// `max_outer` strands, inners on up to `max_block` strands, all words of at
/// most `max_len` letters.
pub fn braid_bounds(max_outer: usize, max_block: usize, max_len: usize) -> CheckBounds<BraidWord> {
    let words = |k: usize| -> Vec<BraidWord> {
        (1..=k)
            .flat_map(|s| braid_words_up_to(s, max_len))
            .collect()
    };
    CheckBounds {
        outers: words(max_outer),
        inners: words(max_block),
        max_result_arity: usize::MAX,
    }
}

/// Every cell on `3..=max_n` marks, with composites limited to
/// `max_result_n` marks.
pub fn mosaic_bounds(max_n: usize, max_result_n: usize) -> Result<CheckBounds<MosaicCell>> {
    let mut cells = Vec::new();
    for n in 3..=max_n {
        let complex = enumerate_cells(n)?;
        for d in 0..=complex.top_dim() {
            cells.extend_from_slice(complex.cells(d));
        }
    }
    Ok(CheckBounds {
        outers: cells.clone(),
        inners: cells,
        max_result_arity: max_result_n - 1,
    })
}

/// The top cell with marks in standard cyclic order.
pub fn standard_top_cell(n: usize) -> Result<MosaicCell> {
    Ok(canonicalize(&MarkedDissection::standard(
        &Dissection::empty(n)?,
    )?))
}
