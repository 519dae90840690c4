use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::assoc::{crosses, Diagonal, Dissection};
use crate::error::{Error, Result};

/// Largest number of marks a [`MarkedDissection`] can carry; keeps the
/// canonical encoding inside a `u128`.
pub const MAX_MARKS: usize = 11;
const MAX_DIAGONALS: usize = MAX_MARKS - 3;

/// Packed encoding of a marked dissection. Numeric order on keys of equal
/// diagonal count is the lexicographic order on (labels, sorted diagonals).
pub type CellKey = u128;

/// An `n`-gon whose sides carry the marks `1..=n` and which is cut by a set
/// of non-crossing diagonals. `labels[j]` is the mark on side `j`, the side
/// joining vertex `j` to vertex `j + 1 mod n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedDissection {
    n: u8,
    count: u8,
    labels: [u8; MAX_MARKS],
    diagonals: [(u8, u8); MAX_DIAGONALS],
}

#[derive(Serialize, Deserialize)]
struct MarkedJson {
    n: usize,
    labels: Vec<usize>,
    diagonals: Vec<[usize; 2]>,
}

impl Serialize for MarkedDissection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MarkedJson {
            n: self.n(),
            labels: self.labels().to_vec(),
            diagonals: self.diagonals().map(|(a, b)| [a, b]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkedDissection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MarkedJson::deserialize(d)?;
        let dissection =
            Dissection::new(j.n, j.diagonals.into_iter().map(|[a, b]| (a, b)).collect())
                .map_err(serde::de::Error::custom)?;
        MarkedDissection::new(j.labels, &dissection).map_err(serde::de::Error::custom)
    }
}

impl MarkedDissection {
    pub fn new(labels: Vec<usize>, dissection: &Dissection) -> Result<Self> {
        let n = labels.len();
        if n != dissection.n() {
            return Err(Error::SizeMismatch {
                left: n,
                right: dissection.n(),
            });
        }
        if !(3..=MAX_MARKS).contains(&n) {
            return Err(Error::UnsupportedSize {
                n,
                min: 3,
                max: MAX_MARKS,
            });
        }
        let mut seen = [false; MAX_MARKS + 1];
        for &l in &labels {
            if l == 0 || l > n || seen[l] {
                return Err(Error::InvalidLabels(n));
            }
            seen[l] = true;
        }
        let mut out = Self {
            n: n as u8,
            count: dissection.len() as u8,
            labels: [0; MAX_MARKS],
            diagonals: [(0, 0); MAX_DIAGONALS],
        };
        for (slot, &l) in out.labels.iter_mut().zip(&labels) {
            *slot = l as u8;
        }
        for (slot, &(a, b)) in out.diagonals.iter_mut().zip(dissection.diagonals()) {
            *slot = (a as u8, b as u8);
        }
        Ok(out)
    }

    /// Marks in the natural cyclic order `1..=n`.
    pub fn standard(dissection: &Dissection) -> Result<Self> {
        Self::new((1..=dissection.n()).collect(), dissection)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn labels(&self) -> Vec<usize> {
        self.labels[..self.n()]
            .iter()
            .map(|&l| l as usize)
            .collect()
    }

    pub fn label_at(&self, side: usize) -> usize {
        self.labels[side] as usize
    }

    /// Position of the side carrying `mark`.
    pub fn side_of(&self, mark: usize) -> Option<usize> {
        self.labels[..self.n()]
            .iter()
            .position(|&l| l as usize == mark)
    }

    pub fn diagonals(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.diagonals[..self.count as usize]
            .iter()
            .map(|&(a, b)| (a as usize, b as usize))
    }

    pub fn diagonal_count(&self) -> usize {
        self.count as usize
    }

    pub fn dim(&self) -> usize {
        self.n() - 3 - self.diagonal_count()
    }

    pub fn dissection(&self) -> Dissection {
        Dissection::from_sorted_unchecked(self.n(), self.diagonals().collect())
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        let d = crate::assoc::normalize(d);
        self.diagonals().any(|e| e == d)
    }

    pub fn is_compatible(&self, d: Diagonal) -> bool {
        let d = crate::assoc::normalize(d);
        crate::assoc::is_diagonal(self.n(), d) && self.diagonals().all(|e| e != d && !crosses(d, e))
    }

    /// Adds a compatible diagonal.
    pub fn with(&self, d: Diagonal) -> Result<Self> {
        let d = crate::assoc::normalize(d);
        let dissection = self.dissection().with(d)?;
        let mut out = *self;
        out.set_diagonals(dissection.diagonals().iter().copied());
        Ok(out)
    }

    /// Relabels every mark `l` to `relabel[l - 1]`.
    pub fn relabel(&self, relabel: &[usize]) -> Result<Self> {
        if relabel.len() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: relabel.len(),
            });
        }
        let labels = self.labels().iter().map(|&l| relabel[l - 1]).collect();
        Self::new(labels, &self.dissection())
    }

    fn set_diagonals(&mut self, ds: impl Iterator<Item = Diagonal>) {
        let mut count = 0;
        for (a, b) in ds {
            self.diagonals[count] = (a as u8, b as u8);
            count += 1;
        }
        self.count = count as u8;
        self.diagonals[count..].fill((0, 0));
        self.diagonals[..count].sort_unstable();
    }

    /// Applies a vertex map (a dihedral symmetry) to every diagonal.
    fn map_vertices(&mut self, f: impl Fn(u8) -> u8) {
        for d in &mut self.diagonals[..self.count as usize] {
            let (a, b) = (f(d.0), f(d.1));
            *d = if a < b { (a, b) } else { (b, a) };
        }
        self.diagonals[..self.count as usize].sort_unstable();
    }

    /// Rotates positions so that side `r` becomes side `0`.
    pub fn rotate(&self, r: usize) -> Self {
        let n = self.n();
        let r = r % n;
        let mut out = *self;
        for j in 0..n {
            out.labels[j] = self.labels[(j + r) % n];
        }
        let (n8, r8) = (n as u8, r as u8);
        out.map_vertices(|v| (v + n8 - r8) % n8);
        out
    }

    /// Reflects the polygon, keeping side `0` in place.
    pub fn reflect(&self) -> Self {
        let n = self.n();
        let mut out = *self;
        for j in 0..n {
            out.labels[j] = self.labels[(n - j) % n];
        }
        let n8 = n as u8;
        out.map_vertices(|v| (n8 + 1 - v) % n8);
        out
    }

    /// The dihedral representative with mark `1` on side `0` and the mark
    /// on side `1` smaller than the mark on side `n - 1`.
    pub fn normalized(&self) -> Self {
        let n = self.n();
        let p = self.labels[..n]
            .iter()
            .position(|&l| l == 1)
            .expect("mark 1 present");
        let out = self.rotate(p);
        if out.labels[1] > out.labels[n - 1] {
            out.reflect()
        } else {
            out
        }
    }

    pub fn is_normalized(&self) -> bool {
        let n = self.n();
        self.labels[0] == 1 && self.labels[1] < self.labels[n - 1]
    }

    /// Reverses the marks on the sides between the endpoints of `d`
    /// (those with positions `a..b` for `d = (a, b)`, `a < b`) and reflects
    /// the diagonals nested on that side. The other side is untouched.
    pub fn twist(&self, d: Diagonal) -> Result<Self> {
        let (a, b) = crate::assoc::normalize(d);
        if !self.contains((a, b)) {
            return Err(Error::DiagonalAbsent((a, b)));
        }
        Ok(self.twist_unchecked(a as u8, b as u8))
    }

    fn twist_unchecked(&self, a: u8, b: u8) -> Self {
        let mut out = *self;
        out.labels[a as usize..b as usize].reverse();
        for e in &mut out.diagonals[..self.count as usize] {
            if a <= e.0 && e.1 <= b && *e != (a, b) {
                *e = (a + b - e.1, a + b - e.0);
            }
        }
        out.diagonals[..self.count as usize].sort_unstable();
        out
    }

    pub fn key(&self) -> CellKey {
        let mut labels: u64 = 0;
        for (j, &l) in self.labels[..self.n()].iter().enumerate() {
            labels |= ((l - 1) as u64) << (60 - 4 * j);
        }
        let mut diags: u64 = 0;
        for (t, &(a, b)) in self.diagonals[..self.count as usize].iter().enumerate() {
            diags |= (((a as u64) << 4) | b as u64) << (56 - 8 * t);
        }
        ((labels as u128) << 64) | diags as u128
    }

    /// Normalized representatives of the orbit under dihedral maps and
    /// twists, found by breadth-first closure.
    pub fn orbit(&self) -> Vec<MarkedDissection> {
        let start = self.normalized();
        let mut members = vec![start];
        let mut keys = vec![start.key()];
        let mut head = 0;
        while head < members.len() {
            let cur = members[head];
            head += 1;
            for &(a, b) in &cur.diagonals[..cur.count as usize] {
                let next = cur.twist_unchecked(a, b).normalized();
                let k = next.key();
                if !keys.contains(&k) {
                    keys.push(k);
                    members.push(next);
                }
            }
        }
        members
    }

    /// Lexicographically least member of the orbit.
    pub fn canonical(&self) -> MarkedDissection {
        self.orbit()
            .into_iter()
            .min_by_key(MarkedDissection::key)
            .expect("orbit is nonempty")
    }
}

impl PartialOrd for MarkedDissection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MarkedDissection {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.count, self.key()).cmp(&(other.n, other.count, other.key()))
    }
}

impl fmt::Debug for MarkedDissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Marked({:?}", self.labels())?;
        let ds: Vec<Diagonal> = self.diagonals().collect();
        write!(f, " {ds:?})")
    }
}
