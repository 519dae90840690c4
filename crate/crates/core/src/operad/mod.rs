//! Operads, their laws, and the braid groupoid acting by cabling.

mod axioms;
mod endo;
mod groupoid;
mod instances;

pub use axioms::{all_pass, operad_axioms_check, CheckBounds, LawReport, Operad, Status};
pub use endo::{EndTable, FiniteEndOperad, MAX_CARRIER};
pub use groupoid::{
    arranged_tensor, cable_functor_apply, groupoid_compose, is_morphism, tensor_objects,
    GroupoidMorphism,
};
pub use instances::{
    braid_bounds, braid_words_up_to, mosaic_bounds, standard_top_cell, BraidOperad, MosaicOperad,
};
