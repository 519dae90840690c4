//! Cellular topology of the mosaic complex: mod-2 Betti numbers, a
//! presentation of the fundamental group from the 2-skeleton, and `H₁` by
//! abelianization. The spaces are aspherical, so the presentation computes
//! the group of the space and its abelianization is group homology in
//! degree one.

mod gf2;
mod homology;
mod matrix;
mod snf;

pub use gf2::{rank_mod2, BitRow};
pub use homology::{
    abelianize, attaching_words, betti_mod2, h1, h1_with_tree, pi1_presentation, spanning_tree,
    AbelianGroup, GroupPresentation, TreeChoice,
};
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithForm};
