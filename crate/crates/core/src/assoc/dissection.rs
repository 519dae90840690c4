use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Diagonal = (usize, usize);

/// Do two diagonals of a convex polygon cross in their interiors?
/// Both must be normalized (`a < b`).
#[inline]
pub fn crosses(d: Diagonal, e: Diagonal) -> bool {
    let ((a, b), (c, f)) = (d, e);
    (a < c && c < b && b < f) || (c < a && a < f && f < b)
}

#[inline]
pub fn normalize(d: Diagonal) -> Diagonal {
    if d.0 <= d.1 {
        d
    } else {
        (d.1, d.0)
    }
}

pub fn is_diagonal(n: usize, d: Diagonal) -> bool {
    let (a, b) = normalize(d);
    b < n && b - a >= 2 && !(a == 0 && b == n - 1)
}

/// All diagonals of the `n`-gon in lexicographic order.
pub fn all_diagonals(n: usize) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            if !(a == 0 && b == n - 1) {
                out.push((a, b));
            }
        }
    }
    out
}

/// A set of pairwise non-crossing diagonals of a convex `n`-gon with vertices
/// `0..n` in cyclic order. Side `j` joins vertex `j` to vertex `j + 1 mod n`.
///
/// As a face of the associahedron its dimension is `(n - 3) - |diagonals|`:
/// the empty dissection is the whole polytope, triangulations are vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "DissectionJson", into = "DissectionJson")]
pub struct Dissection {
    n: usize,
    diagonals: Vec<Diagonal>,
}

#[derive(Serialize, Deserialize)]
struct DissectionJson {
    n: usize,
    diagonals: Vec<[usize; 2]>,
}

impl TryFrom<DissectionJson> for Dissection {
    type Error = Error;

    fn try_from(j: DissectionJson) -> Result<Self> {
        Dissection::new(j.n, j.diagonals.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<Dissection> for DissectionJson {
    fn from(d: Dissection) -> Self {
        DissectionJson {
            n: d.n,
            diagonals: d.diagonals.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl Dissection {
    pub fn new(n: usize, diagonals: Vec<Diagonal>) -> Result<Self> {
        if n < 3 {
            return Err(Error::PolygonTooSmall(n));
        }
        let mut diagonals: Vec<Diagonal> = diagonals.into_iter().map(normalize).collect();
        for &d in &diagonals {
            if !is_diagonal(n, d) {
                return Err(Error::InvalidDiagonal { diagonal: d, n });
            }
        }
        diagonals.sort_unstable();
        for pair in diagonals.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateDiagonal(pair[0]));
            }
        }
        for (i, &d) in diagonals.iter().enumerate() {
            for &e in &diagonals[i + 1..] {
                if crosses(d, e) {
                    return Err(Error::CrossingDiagonals(d, e));
                }
            }
        }
        Ok(Self { n, diagonals })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub(crate) fn from_sorted_unchecked(n: usize, diagonals: Vec<Diagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|p| p[0] < p[1]));
        Self { n, diagonals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.n - 3 - self.diagonals.len()
    }

    pub fn is_triangulation(&self) -> bool {
        self.diagonals.len() == self.n - 3
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&normalize(d)).is_ok()
    }

    /// Can `d` be added without crossing or duplicating?
    pub fn is_compatible(&self, d: Diagonal) -> bool {
        let d = normalize(d);
        is_diagonal(self.n, d)
            && !self.contains(d)
            && self.diagonals.iter().all(|&e| !crosses(d, e))
    }

    /// Diagonals that can be added, in lexicographic order.
    pub fn compatible_diagonals(&self) -> Vec<Diagonal> {
        all_diagonals(self.n)
            .into_iter()
            .filter(|&d| self.is_compatible(d))
            .collect()
    }

    pub fn with(&self, d: Diagonal) -> Result<Self> {
        let d = normalize(d);
        if !is_diagonal(self.n, d) {
            return Err(Error::InvalidDiagonal {
                diagonal: d,
                n: self.n,
            });
        }
        if self.contains(d) {
            return Err(Error::DuplicateDiagonal(d));
        }
        if let Some(&e) = self.diagonals.iter().find(|&&e| crosses(d, e)) {
            return Err(Error::CrossingDiagonals(d, e));
        }
        let mut diagonals = self.diagonals.clone();
        let at = diagonals.binary_search(&d).unwrap_err();
        diagonals.insert(at, d);
        Ok(Self {
            n: self.n,
            diagonals,
        })
    }

    pub fn without(&self, d: Diagonal) -> Result<Self> {
        let d = normalize(d);
        let at = self
            .diagonals
            .binary_search(&d)
            .map_err(|_| Error::DiagonalAbsent(d))?;
        let mut diagonals = self.diagonals.clone();
        diagonals.remove(at);
        Ok(Self {
            n: self.n,
            diagonals,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_predicate() {
        assert!(crosses((0, 2), (1, 3)));
        assert!(crosses((1, 3), (0, 2)));
        assert!(!crosses((0, 2), (2, 4)));
        assert!(!crosses((0, 3), (1, 2)));
        assert!(!crosses((0, 2), (3, 5)));
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(Dissection::new(2, vec![]).is_err());
        assert!(Dissection::new(5, vec![(0, 1)]).is_err());
        assert!(Dissection::new(5, vec![(0, 4)]).is_err());
        assert!(Dissection::new(5, vec![(0, 2), (2, 0)]).is_err());
        assert!(Dissection::new(5, vec![(0, 2), (1, 3)]).is_err());
        assert!(Dissection::new(5, vec![(0, 2), (2, 4)]).is_ok());
    }

    #[test]
    fn json_shape() {
        let d = Dissection::new(5, vec![(2, 4), (0, 2)]).unwrap();
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(text, r#"{"n":5,"diagonals":[[0,2],[2,4]]}"#);
        let back: Dissection = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
        assert!(
            serde_json::from_str::<Dissection>(r#"{"n":5,"diagonals":[[0,2],[1,3]]}"#).is_err()
        );
    }

    #[test]
    fn counts_of_candidate_diagonals() {
        for n in 3..10 {
            assert_eq!(all_diagonals(n).len(), n * (n - 3) / 2);
        }
    }
}
