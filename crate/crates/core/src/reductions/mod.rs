//! Gadget constructions from the hardness proofs, as labeled graphs with
//! the witness matchings their YES directions describe.

pub mod artifact;
pub mod conp;
pub mod diam4;
pub mod subcubic;
pub mod x3c;

pub use artifact::{LabelIndex, ReductionArtifact};
pub use conp::build_conp_reduction;
pub use diam4::{
    base_matching_number, build_reduction_diam4, build_reduction_nu_nudi,
    build_reduction_nudi_nudj, witness_matching_diam4,
};
pub use subcubic::{
    build_gadget_h, build_gadget_pi, build_subcubic_f, hub_size_bottom, hub_size_top,
    s_avoiding_h_matching, witness_matching_f,
};
pub use x3c::{solve_x3c, X3CInstance, X3C_TRIPLE_LIMIT};
