use std::fmt;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letter `k > 0` is the generator crossing positions `k` and `k + 1`,
/// letter `-k` its inverse. The leftmost letter acts first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        for &letter in &letters {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidLetter { letter, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0);
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated signed generator indices, e.g. `"1 2 -1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(Self::new(strands, letters.clone()).is_ok());
        Self { strands, letters }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Cancels adjacent pairs `k, -k` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    /// The permutation image: generator `k` maps to the transposition of
    /// positions `k` and `k + 1`, composed left to right.
    pub fn to_permutation(&self) -> Permutation {
        let mut arrangement: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            arrangement.swap(k - 1, k);
        }
        // arrangement[pos] = strand at pos; the permutation is its inverse
        let mut images = vec![0; self.strands];
        for (pos, &strand) in arrangement.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation::from_zero_based(images).expect("swaps preserve bijectivity")
    }

    /// Monoidal product: `self` on the left strands, `other` shifted right.
    pub fn juxtapose(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&l| l + l.signum() * shift));
        Self {
            strands: self.strands + other.strands,
            letters,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, [{}])", self.strands, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn validates_letters() {
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
        assert!(BraidWord::new(1, vec![]).is_ok());
        assert!(BraidWord::parse(3, "1 x").is_err());
    }

    #[test]
    fn free_reduction_examples() {
        assert_eq!(w(2, &[1, -1]).free_reduce(), w(2, &[]));
        assert_eq!(w(3, &[1, 2, -2, -1]).free_reduce(), w(3, &[]));
        assert_eq!(w(3, &[1, 2, 1]).free_reduce(), w(3, &[1, 2, 1]));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w(2, &[1]).to_permutation().to_one_based(), vec![2, 1]);
        assert!(w(3, &[]).to_permutation().is_identity());
        // (1 2) then (2 3): 1 -> 3, 2 -> 1, 3 -> 2
        assert_eq!(w(3, &[1, 2]).to_permutation().to_one_based(), vec![3, 1, 2]);
    }

    #[test]
    fn juxtapose_examples() {
        assert_eq!(w(2, &[1]).juxtapose(&w(2, &[1])), w(4, &[1, 3]));
        assert_eq!(w(1, &[]).juxtapose(&w(3, &[1, -2])), w(4, &[2, -3]));
        let (a, b, c) = (w(2, &[1]), w(3, &[-2, 1]), w(2, &[-1]));
        assert_eq!(a.juxtapose(&b).juxtapose(&c), a.juxtapose(&b.juxtapose(&c)));
    }

    #[test]
    fn parse_and_display() {
        let b = BraidWord::parse(4, " 1  -3 2 ").unwrap();
        assert_eq!(b.letters(), &[1, -3, 2]);
        assert_eq!(b.to_string(), "1 -3 2");
    }
}
