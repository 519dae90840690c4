//! Scalar traits the exact algorithms are generic over.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_traits::{Num, Signed};

/// Exact field arithmetic: rationals, Gaussian rationals, and so on.
/// Floating-point types satisfy the bounds but lose the exactness the
/// cross-ratio tests depend on.
pub trait ExactField: Num + Clone + PartialEq + Neg<Output = Self> + Debug {}

impl<T> ExactField for T where T: Num + Clone + PartialEq + Neg<Output = T> + Debug {}

/// Euclidean integer types usable as Smith normal form entries.
pub trait IntegerRing: Integer + Signed + Clone + Debug {}

impl<T> IntegerRing for T where T: Integer + Signed + Clone + Debug {}
