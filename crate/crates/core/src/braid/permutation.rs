use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored zero-based.
///
/// Composition follows the braid-word convention: `a.then(&b)` applies `a`
/// first, so `a.then(&b)(x) = b(a(x))`. The permutation of a braid sends the
/// strand starting at position `i` to the position where it ends.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The transposition of positions `i` and `i + 1` (one-based `i`).
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(
            i >= 1 && i < n,
            "transposition index {i} out of range for n = {n}"
        );
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Self { images }
    }

    /// The order-reversing permutation, image of the half twist.
    pub fn reversal(n: usize) -> Self {
        Self {
            images: (0..n).rev().collect(),
        }
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let zero: Option<Vec<usize>> = images.iter().map(|&v| v.checked_sub(1)).collect();
        Self::from_zero_based(zero.ok_or(Error::InvalidPermutation(n))?)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Zero-based image of zero-based `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Number of inversions, i.e. the length of the positive permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint sum: `self` on the first block, `other` shifted on the second.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|v| v + shift));
        Permutation { images }
    }

    /// Permutes contiguous blocks: block `k` (of size `sizes[k]`, blocks laid
    /// out in order) moves to block position `self(k)`, keeping its internal
    /// order.
    pub fn block_permutation(&self, sizes: &[usize]) -> Permutation {
        assert_eq!(self.len(), sizes.len());
        let n = self.len();
        // sizes of the blocks in their final order
        let inv = self.inverse();
        let mut final_offset = vec![0; n];
        let mut acc = 0;
        for pos in 0..n {
            let block = inv.apply(pos);
            final_offset[block] = acc;
            acc += sizes[block];
        }
        let mut images = Vec::with_capacity(acc);
        for (block, &size) in sizes.iter().enumerate() {
            images.extend((0..size).map(|t| final_offset[block] + t));
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.to_one_based())
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.to_one_based()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_based(&v)
    }
}
