//! The quotient groupoid `[H/G]` of a surjection `φ: G → H`, specialized to
//! the braid group over the symmetric group, and its action on the braid
//! category by cabling.
//!
//! Objects are permutations `h`; a morphism `h₀ → h₁` is a braid `g` with
//! `h₀` followed by `φ(g)` equal to `h₁`. Hom-sets are infinite, so nothing
//! is materialized: membership is a predicate and composition concatenates.

use serde::Serialize;

use crate::braid::{braids_equal, cable, BraidWord, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupoidMorphism {
    pub source: Permutation,
    pub target: Permutation,
    pub element: BraidWord,
}

/// Does `g` belong to `mor(h₀, h₁)`?
pub fn is_morphism(source: &Permutation, target: &Permutation, g: &BraidWord) -> bool {
    source.len() == g.strands()
        && target.len() == g.strands()
        && source.then(&g.to_permutation()) == *target
}

impl GroupoidMorphism {
    pub fn new(source: Permutation, target: Permutation, element: BraidWord) -> Result<Self> {
        if !is_morphism(&source, &target, &element) {
            return Err(Error::NotAMorphism);
        }
        Ok(Self {
            source,
            target,
            element,
        })
    }

    /// The morphism `g: h₀ → h₀ φ(g)`.
    pub fn from_source(source: Permutation, element: BraidWord) -> Result<Self> {
        if source.len() != element.strands() {
            return Err(Error::StrandMismatch {
                left: source.len(),
                right: element.strands(),
            });
        }
        let target = source.then(&element.to_permutation());
        Ok(Self {
            source,
            target,
            element,
        })
    }

    pub fn identity(object: Permutation) -> Self {
        let n = object.len();
        Self {
            source: object.clone(),
            target: object,
            element: BraidWord::identity(n),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            source: self.target.clone(),
            target: self.source.clone(),
            element: self.element.inverse(),
        }
    }

    pub fn arity(&self) -> usize {
        self.element.strands()
    }

    pub fn is_valid(&self) -> bool {
        is_morphism(&self.source, &self.target, &self.element)
    }

    /// Same endpoints and equal braids.
    pub fn equivalent(&self, other: &Self) -> Result<bool> {
        Ok(self.source == other.source
            && self.target == other.target
            && braids_equal(&self.element, &other.element)?)
    }
}

/// `a` followed by `b`.
pub fn groupoid_compose(a: &GroupoidMorphism, b: &GroupoidMorphism) -> Result<GroupoidMorphism> {
    if a.target != b.source {
        return Err(Error::ObjectMismatch);
    }
    Ok(GroupoidMorphism {
        source: a.source.clone(),
        target: b.target.clone(),
        element: a.element.concat(&b.element)?,
    })
}

/// Object part of the action: `(m₁, …, mₙ) ↦ m₁ + … + mₙ`.
pub fn tensor_objects(objects: &[usize]) -> usize {
    objects.iter().sum()
}

/// Juxtaposes `inputs` with input `k` placed at position `arrangement(k)`.
pub fn arranged_tensor(arrangement: &Permutation, inputs: &[BraidWord]) -> Result<BraidWord> {
    let by_position = arrange(arrangement, inputs)?;
    Ok(by_position[1..]
        .iter()
        .fold(by_position[0].clone(), |acc, b| acc.juxtapose(b)))
}

fn arrange(arrangement: &Permutation, inputs: &[BraidWord]) -> Result<Vec<BraidWord>> {
    if arrangement.len() != inputs.len() {
        return Err(Error::ArityMismatch {
            expected: arrangement.len(),
            found: inputs.len(),
        });
    }
    let mut by_position = vec![BraidWord::identity(1); inputs.len()];
    for (k, b) in inputs.iter().enumerate() {
        by_position[arrangement.apply(k)] = b.clone();
    }
    Ok(by_position)
}

/// The braid `g` acting on the braid category: input `k` (a braid on `mₖ`
/// strands) sits on the block at bottom position `source(k)` and the
/// element of `g` is cabled over these blocks.
pub fn cable_functor_apply(
    g: &GroupoidMorphism,
    objects: &[usize],
    morphisms: &[BraidWord],
) -> Result<BraidWord> {
    let n = g.arity();
    if objects.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: objects.len(),
        });
    }
    if morphisms.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: morphisms.len(),
        });
    }
    for (&m, b) in objects.iter().zip(morphisms) {
        if b.strands() != m {
            return Err(Error::StrandMismatch {
                left: m,
                right: b.strands(),
            });
        }
    }
    cable(&g.element, &arrange(&g.source, morphisms)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn composing_crossings() {
        let e = Permutation::identity(2);
        let t = Permutation::transposition(2, 1);
        let a = GroupoidMorphism::new(e.clone(), t.clone(), w(2, &[1])).unwrap();
        let b = GroupoidMorphism::new(t.clone(), e.clone(), w(2, &[1])).unwrap();
        let ab = groupoid_compose(&a, &b).unwrap();
        assert_eq!(ab.element, w(2, &[1, 1]));
        assert_eq!(
            (ab.source.clone(), ab.target.clone()),
            (e.clone(), e.clone())
        );
        assert!(groupoid_compose(&a, &a).is_err());
        assert!(GroupoidMorphism::new(e.clone(), e.clone(), w(2, &[1])).is_err());
    }

    #[test]
    fn identities_are_neutral() {
        let t = Permutation::transposition(3, 2);
        let g = GroupoidMorphism::from_source(t.clone(), w(3, &[1, -2])).unwrap();
        let left = groupoid_compose(&GroupoidMorphism::identity(t), &g).unwrap();
        let right = groupoid_compose(&g, &GroupoidMorphism::identity(g.target.clone())).unwrap();
        assert_eq!(left, g);
        assert_eq!(right, g);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let e = Permutation::identity(2);
        let t = Permutation::transposition(2, 1);
        let inv = GroupoidMorphism::new(t.clone(), e.clone(), w(2, &[-1])).unwrap();
        let fwd = inv.inverse();
        let loop_ = groupoid_compose(&fwd, &inv).unwrap();
        assert!(loop_.equivalent(&GroupoidMorphism::identity(e)).unwrap());
    }

    #[test]
    fn identity_action_is_juxtaposition() {
        let g = GroupoidMorphism::identity(Permutation::identity(3));
        let bs = [w(2, &[1]), w(1, &[]), w(3, &[2, -1])];
        let out = cable_functor_apply(&g, &[2, 1, 3], &bs).unwrap();
        assert_eq!(out, bs[0].juxtapose(&bs[1]).juxtapose(&bs[2]));
        assert_eq!(tensor_objects(&[2, 1, 3]), out.strands());
        assert!(cable_functor_apply(&g, &[2, 2, 3], &bs).is_err());
    }
}
