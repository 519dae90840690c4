//! Left-greedy normal form over the classical Garside structure of the braid
//! group: simple elements are positive permutation braids, `Δ` is the half
//! twist. Every braid is uniquely `Δ^p · s₁ ⋯ s_r` with each `sᵢ` simple,
//! different from `1` and `Δ`, and each consecutive pair left-weighted.

use serde::{Deserialize, Serialize};

use super::{BraidWord, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub delta_power: i64,
    pub factors: Vec<Permutation>,
}

/// Positions `i` (one-based) with `a · σᵢ` no longer simple.
pub fn finishing_set(a: &Permutation) -> Vec<usize> {
    let inv = a.inverse();
    (1..a.len())
        .filter(|&i| inv.apply(i - 1) > inv.apply(i))
        .collect()
}

/// Positions `i` (one-based) with `b = σᵢ · b'` for a simple `b'`.
pub fn starting_set(b: &Permutation) -> Vec<usize> {
    (1..b.len())
        .filter(|&i| b.apply(i - 1) > b.apply(i))
        .collect()
}

fn is_right_descent(a: &Permutation, i: usize) -> bool {
    // strands ending at positions i, i+1 have already crossed
    let (mut left, mut right) = (usize::MAX, usize::MAX);
    for s in 0..a.len() {
        if a.apply(s) == i - 1 {
            left = s;
        } else if a.apply(s) == i {
            right = s;
        }
    }
    left > right
}

/// `Δ^{-1} s Δ`, which as a permutation is conjugation by the reversal.
fn flip(s: &Permutation) -> Permutation {
    let w0 = Permutation::reversal(s.len());
    w0.then(s).then(&w0)
}

/// Slides letters of `b` into `a` until the pair is left-weighted.
/// Returns whether anything moved.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let candidate = (1..n).find(|&i| b.apply(i - 1) > b.apply(i) && !is_right_descent(a, i));
        match candidate {
            Some(i) => {
                let s = Permutation::transposition(n, i);
                *a = a.then(&s);
                *b = s.then(b);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// A reduced positive word for the permutation braid of `p`.
pub fn permutation_braid(p: &Permutation) -> Vec<i32> {
    let n = p.len();
    let mut rest = p.clone();
    let mut letters = Vec::with_capacity(rest.inversions());
    while let Some(i) = (1..n).find(|&i| rest.apply(i - 1) > rest.apply(i)) {
        letters.push(i as i32);
        rest = Permutation::transposition(n, i).then(&rest);
    }
    letters
}

pub fn garside_normal_form(word: &BraidWord) -> GarsideNormalForm {
    let n = word.strands();
    let w0 = Permutation::reversal(n);
    let mut delta_power: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::new();

    for &letter in word.letters() {
        let k = letter.unsigned_abs() as usize;
        let s = Permutation::transposition(n, k);
        if letter > 0 {
            factors.push(s);
        } else {
            // x σₖ⁻¹ = Δ^{p-1} τ(x) (Δ σₖ⁻¹)
            delta_power -= 1;
            for f in factors.iter_mut() {
                *f = flip(f);
            }
            factors.push(w0.then(&s));
        }
    }

    let mut changed = true;
    while changed {
        changed = false;
        for j in (1..factors.len()).rev() {
            let (head, tail) = factors.split_at_mut(j);
            if make_left_weighted(&mut head[j - 1], &mut tail[0]) {
                changed = true;
            }
        }
    }

    let mut lead = 0;
    while lead < factors.len() && factors[lead] == w0 {
        lead += 1;
    }
    delta_power += lead as i64;
    let factors: Vec<Permutation> = factors
        .into_iter()
        .skip(lead)
        .filter(|f| !f.is_identity())
        .collect();
    // the half twist on one or two strands is its own edge case
    debug_assert!(factors.iter().all(|f| *f != w0));

    GarsideNormalForm {
        strands: n,
        delta_power,
        factors,
    }
}

impl GarsideNormalForm {
    /// A word representing the normal form: `Δ^p` followed by the factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = permutation_braid(&Permutation::reversal(n));
        let mut letters = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<i32> = delta.iter().rev().map(|l| -l).collect();
            for _ in 0..(-self.delta_power) {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(permutation_braid(f));
        }
        BraidWord::from_parts_unchecked(n, letters)
    }

    /// Infimum, supremum pair `(p, p + r)`.
    pub fn inf_sup(&self) -> (i64, i64) {
        (
            self.delta_power,
            self.delta_power + self.factors.len() as i64,
        )
    }

    pub fn is_left_weighted(&self) -> bool {
        self.factors.windows(2).all(|pair| {
            let fin = finishing_set(&pair[0]);
            starting_set(&pair[1]).iter().all(|i| fin.contains(i))
        })
    }
}

pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    if u.letters() == v.letters() {
        return Ok(true);
    }
    if u.to_permutation() != v.to_permutation() || u.exponent_sum() != v.exponent_sum() {
        return Ok(false);
    }
    Ok(garside_normal_form(u) == garside_normal_form(v))
}
