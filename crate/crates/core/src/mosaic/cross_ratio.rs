use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ExactField;

/// A point of the projective line over `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ProjectivePoint<T> {
    Finite(T),
    Infinity,
}

impl<T: fmt::Display> fmt::Display for ProjectivePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(x) => write!(f, "{x}"),
            ProjectivePoint::Infinity => f.write_str("∞"),
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for ProjectivePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(x) => write!(f, "{x:?}"),
            ProjectivePoint::Infinity => f.write_str("∞"),
        }
    }
}

impl<T> From<T> for ProjectivePoint<T> {
    fn from(x: T) -> Self {
        ProjectivePoint::Finite(x)
    }
}

impl<T> ProjectivePoint<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjectivePoint::Infinity)
    }
}

fn difference<T: ExactField>(a: &ProjectivePoint<T>, b: &ProjectivePoint<T>) -> Option<T> {
    match (a, b) {
        (ProjectivePoint::Finite(x), ProjectivePoint::Finite(y)) => Some(x.clone() - y.clone()),
        _ => None,
    }
}

/// `((z₁ - z₃)(z₂ - z₄)) / ((z₁ - z₄)(z₂ - z₃))`, exact. Each point occurs
/// once above and once below the bar, so a point at infinity cancels its two
/// factors.
pub fn cross_ratio<T: ExactField>(z: [&ProjectivePoint<T>; 4]) -> Result<ProjectivePoint<T>> {
    for i in 0..4 {
        for j in i + 1..4 {
            if z[i] == z[j] {
                return Err(Error::CoincidentPoints);
            }
        }
    }
    let product = |pairs: [(usize, usize); 2]| {
        pairs
            .iter()
            .filter_map(|&(i, j)| difference(z[i], z[j]))
            .fold(T::one(), |acc, x| acc * x)
    };
    let num = product([(0, 2), (1, 3)]);
    let den = product([(0, 3), (1, 2)]);
    Ok(ProjectivePoint::Finite(num / den))
}

/// The fractional-linear map `z ↦ (a z + b) / (c z + d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: ExactField> Mobius<T> {
    /// Returns `None` for a singular matrix.
    pub fn new(a: T, b: T, c: T, d: T) -> Option<Self> {
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        if det.is_zero() {
            None
        } else {
            Some(Self { a, b, c, d })
        }
    }

    pub fn identity() -> Self {
        Self {
            a: T::one(),
            b: T::zero(),
            c: T::zero(),
            d: T::one(),
        }
    }

    pub fn apply(&self, z: &ProjectivePoint<T>) -> ProjectivePoint<T> {
        match z {
            ProjectivePoint::Finite(x) => {
                let den = self.c.clone() * x.clone() + self.d.clone();
                if den.is_zero() {
                    ProjectivePoint::Infinity
                } else {
                    ProjectivePoint::Finite((self.a.clone() * x.clone() + self.b.clone()) / den)
                }
            }
            ProjectivePoint::Infinity => {
                if self.c.is_zero() {
                    ProjectivePoint::Infinity
                } else {
                    ProjectivePoint::Finite(self.a.clone() / self.c.clone())
                }
            }
        }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (p, q, r, s) = (&other.a, &other.b, &other.c, &other.d);
        Self {
            a: p.clone() * a.clone() + q.clone() * c.clone(),
            b: p.clone() * b.clone() + q.clone() * d.clone(),
            c: r.clone() * a.clone() + s.clone() * c.clone(),
            d: r.clone() * b.clone() + s.clone() * d.clone(),
        }
    }

    /// Is this map the identity on the projective line?
    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// The unique map sending three distinct points to `∞, 0, 1`.
    pub fn normalizing(
        z1: &ProjectivePoint<T>,
        z2: &ProjectivePoint<T>,
        z3: &ProjectivePoint<T>,
    ) -> Result<Self> {
        use ProjectivePoint::{Finite, Infinity};
        if z1 == z2 || z1 == z3 || z2 == z3 {
            return Err(Error::CoincidentPoints);
        }
        let one = T::one();
        let zero = T::zero();
        let m = match (z1, z2, z3) {
            (Infinity, Finite(b), Finite(c)) => {
                Self::new(one, -b.clone(), zero, c.clone() - b.clone())
            }
            (Finite(a), Infinity, Finite(c)) => {
                Self::new(zero, c.clone() - a.clone(), one, -a.clone())
            }
            (Finite(a), Finite(b), Infinity) => Self::new(one.clone(), -b.clone(), one, -a.clone()),
            (Finite(a), Finite(b), Finite(c)) => {
                let (ca, cb) = (c.clone() - a.clone(), c.clone() - b.clone());
                Self::new(ca.clone(), -(b.clone() * ca), cb.clone(), -(a.clone() * cb))
            }
            _ => unreachable!("points are distinct"),
        };
        Ok(m.expect("distinct points give an invertible map"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> ProjectivePoint<BigRational> {
        ProjectivePoint::Finite(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn normalization_convention() {
        let lambda = q(7, 3);
        let inf = ProjectivePoint::Infinity;
        let cr = cross_ratio([&inf, &q(0, 1), &q(1, 1), &lambda]).unwrap();
        assert_eq!(cr, lambda);
    }

    #[test]
    fn coincident_points_rejected() {
        assert!(cross_ratio([&q(1, 1), &q(2, 1), &q(1, 1), &q(3, 1)]).is_err());
        let inf = ProjectivePoint::<BigRational>::Infinity;
        assert!(cross_ratio([&inf, &q(2, 1), &inf, &q(3, 1)]).is_err());
    }

    #[test]
    fn swapping_first_two_inverts() {
        let z = [q(1, 2), q(-3, 1), q(5, 7), q(2, 1)];
        let a = cross_ratio([&z[0], &z[1], &z[2], &z[3]]).unwrap();
        let b = cross_ratio([&z[1], &z[0], &z[2], &z[3]]).unwrap();
        match (a, b) {
            (ProjectivePoint::Finite(x), ProjectivePoint::Finite(y)) => {
                assert_eq!(x * y, BigRational::from_integer(1.into()))
            }
            _ => panic!("finite expected"),
        }
    }

    #[test]
    fn normalizing_map_hits_cross_ratio() {
        let z = [q(1, 2), ProjectivePoint::Infinity, q(5, 7), q(2, 1)];
        let m = Mobius::normalizing(&z[0], &z[1], &z[2]).unwrap();
        assert_eq!(m.apply(&z[0]), ProjectivePoint::Infinity);
        assert_eq!(m.apply(&z[1]), q(0, 1));
        assert_eq!(m.apply(&z[2]), q(1, 1));
        assert_eq!(
            m.apply(&z[3]),
            cross_ratio([&z[0], &z[1], &z[2], &z[3]]).unwrap()
        );
    }
}
