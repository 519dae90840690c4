use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("braid letter {letter} is not a generator of the {strands}-strand braid group")]
    InvalidLetter { letter: i32, strands: usize },
    #[error("a braid needs at least one strand")]
    ZeroStrands,
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("polygon size {0} is below 3")]
    PolygonTooSmall(usize),
    #[error("{diagonal:?} is not a diagonal of a {n}-gon")]
    InvalidDiagonal { diagonal: (usize, usize), n: usize },
    #[error("diagonals {0:?} and {1:?} cross")]
    CrossingDiagonals((usize, usize), (usize, usize)),
    #[error("duplicate diagonal {0:?}")]
    DuplicateDiagonal((usize, usize)),
    #[error("diagonal count {k} out of range 0..={max}")]
    DiagonalCountOutOfRange { k: usize, max: usize },
    #[error("dissection is not a triangulation")]
    NotTriangulation,
    #[error("diagonal {0:?} is not in the dissection")]
    DiagonalAbsent((usize, usize)),
    #[error("slot {slot} out of range 1..={max}")]
    SlotOutOfRange { slot: usize, max: usize },
    #[error("mark {mark} out of range 1..={max}")]
    InvalidMark { mark: usize, max: usize },
    #[error("labels are not a bijection onto 1..={0}")]
    InvalidLabels(usize),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("n = {n} outside supported range {min}..={max}")]
    UnsupportedSize { n: usize, min: usize, max: usize },
    #[error("cross-ratio needs four distinct points")]
    CoincidentPoints,
    #[error("boundary of boundary is nonzero in degree {0}")]
    BoundaryNotClosed(usize),
    #[error("1-skeleton is disconnected")]
    Disconnected,
    #[error("cell {cell} in dimension {dim} is folded by its stabilizer")]
    Folding { dim: usize, cell: usize },
    #[error("cell {cell} not present in dimension {dim}")]
    UnknownCell { dim: usize, cell: usize },
    #[error(
        "table of length {found} does not match arity {arity} over a carrier of size {carrier}"
    )]
    BadTable {
        arity: usize,
        carrier: usize,
        found: usize,
    },
    #[error("groupoid objects do not match")]
    ObjectMismatch,
    #[error("groupoid morphism violates the membership law")]
    NotAMorphism,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
