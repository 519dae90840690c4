//! Braid words, the permutation homomorphism, Garside normal forms and the
//! braid operad (cabling and juxtaposition).

mod cable;
mod garside;
mod permutation;
mod word;

pub use cable::{cable, negative_block_crossing, positive_block_crossing, thicken};
pub use garside::{
    braids_equal, finishing_set, garside_normal_form, permutation_braid, starting_set,
    GarsideNormalForm,
};
pub use permutation::Permutation;
pub use word::BraidWord;
