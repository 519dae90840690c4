//! Braid operad composition.
//!
//! Conventions: strands are numbered at the bottom of the braid, i.e. before
//! the first letter acts. `cable(outer; inners)` first performs the inner
//! braids side by side (inner `k` on the block that starts at bottom position
//! `k`), then the outer braid with every strand thickened into its block.

use super::BraidWord;
use crate::error::{Error, Result};

/// Positive crossing of a `p`-block (left) over a `q`-block (right) whose
/// first strand sits at zero-based offset `start`. Emits `p·q` letters, the
/// rightmost strand of the left block moving first.
pub fn positive_block_crossing(start: usize, p: usize, q: usize) -> Vec<i32> {
    let mut letters = Vec::with_capacity(p * q);
    for r in (0..p).rev() {
        for t in 0..q {
            letters.push((start + r + t + 1) as i32);
        }
    }
    letters
}

/// Inverse of the positive crossing that would bring a `q`-block and
/// `p`-block arrangement (`q` on the left) back to `p, q`.
pub fn negative_block_crossing(start: usize, p: usize, q: usize) -> Vec<i32> {
    positive_block_crossing(start, q, p)
        .iter()
        .rev()
        .map(|l| -l)
        .collect()
}

/// Replaces each strand of `outer` with a parallel block of strands sized by
/// the bottom-position block sizes.
pub fn thicken(outer: &BraidWord, sizes: &[usize]) -> Result<BraidWord> {
    if sizes.len() != outer.strands() {
        return Err(Error::ArityMismatch {
            expected: outer.strands(),
            found: sizes.len(),
        });
    }
    let total: usize = sizes.iter().sum();
    if total == 0 || sizes.contains(&0) {
        return Err(Error::ZeroStrands);
    }
    let mut current = sizes.to_vec();
    let mut letters = Vec::new();
    for &letter in outer.letters() {
        let j = letter.unsigned_abs() as usize - 1;
        let start: usize = current[..j].iter().sum();
        let (p, q) = (current[j], current[j + 1]);
        if letter > 0 {
            letters.extend(positive_block_crossing(start, p, q));
        } else {
            letters.extend(negative_block_crossing(start, p, q));
        }
        current.swap(j, j + 1);
    }
    Ok(BraidWord::from_parts_unchecked(total, letters))
}

pub fn cable(outer: &BraidWord, inners: &[BraidWord]) -> Result<BraidWord> {
    if inners.len() != outer.strands() {
        return Err(Error::ArityMismatch {
            expected: outer.strands(),
            found: inners.len(),
        });
    }
    let sizes: Vec<usize> = inners.iter().map(BraidWord::strands).collect();
    let bottom = inners[1..]
        .iter()
        .fold(inners[0].clone(), |acc, b| acc.juxtapose(b));
    bottom.concat(&thicken(outer, &sizes)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braids_equal, Permutation};

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn cable_of_identity_is_juxtaposition() {
        let inners = [w(2, &[1]), w(1, &[]), w(3, &[-2, 1])];
        let out = cable(&w(3, &[]), &inners).unwrap();
        assert_eq!(
            out,
            w(2, &[1]).juxtapose(&w(1, &[])).juxtapose(&w(3, &[-2, 1]))
        );
    }

    #[test]
    fn unit_inners_return_outer() {
        let outer = w(3, &[1, -2, 2, 1]);
        let ones = vec![BraidWord::identity(1); 3];
        assert_eq!(cable(&outer, &ones).unwrap(), outer);
    }

    #[test]
    fn two_block_over_one() {
        let out = cable(&w(2, &[1]), &[w(2, &[]), w(1, &[])]).unwrap();
        assert_eq!(out, w(3, &[2, 1]));
        let expected = Permutation::transposition(2, 1).block_permutation(&[2, 1]);
        assert_eq!(out.to_permutation(), expected);
    }

    #[test]
    fn negative_crossing_cancels_positive() {
        let outer = w(2, &[1, -1]);
        let out = cable(&outer, &[w(2, &[]), w(3, &[])]).unwrap();
        assert!(out.free_reduce().is_empty());
        let outer = w(2, &[-1, 1]);
        let out = cable(&outer, &[w(1, &[]), w(2, &[])]).unwrap();
        assert!(braids_equal(&out, &w(3, &[])).unwrap());
    }

    #[test]
    fn arity_errors() {
        assert!(cable(&w(2, &[1]), &[w(1, &[])]).is_err());
    }
}
