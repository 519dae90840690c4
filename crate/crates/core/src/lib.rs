//! Exact combinatorial models of three operads: the braid operad with
//! cabling, the A∞ operad of associahedra, and the mosaic operad of real
//! moduli spaces `M̄₀,ₙ(ℝ)`, together with the cellular topology needed to
//! read off Euler characteristics, mod-2 Betti numbers and `H₁`.

pub mod assoc;
pub mod braid;
pub mod error;
pub mod mosaic;
pub mod operad;
pub mod scalar;
pub mod topology;

pub use error::{Error, Result};

/// Rational scalars for the cross-ratio.
pub type Rational = num_rational::BigRational;
/// A point of the rational projective line.
pub type RationalPoint = mosaic::ProjectivePoint<Rational>;
/// Fractional-linear maps with rational coefficients.
pub type RationalMobius = mosaic::Mobius<Rational>;
/// Machine-integer matrices for presentations of `H₁`.
pub type IntMatrix = topology::IntegerMatrix<i64>;
/// Arbitrary-precision integer matrices.
pub type BigIntMatrix = topology::IntegerMatrix<num_bigint::BigInt>;
/// Abelian groups with machine-integer torsion coefficients.
pub type AbelianGroup = topology::AbelianGroup<i64>;
