//! Rank over the two-element field with packed bit rows.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }
}

/// Rank of the matrix whose rows are `rows`, each of width `cols`.
pub fn rank_mod2(rows: impl IntoIterator<Item = BitRow>, cols: usize) -> usize {
    let mut basis: Vec<Option<BitRow>> = vec![None; cols];
    let mut rank = 0;
    for mut row in rows {
        while let Some(lead) = row.lowest_set() {
            match &basis[lead] {
                Some(b) => row.xor_assign(b),
                None => {
                    basis[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
