//! Polynomial-time deciders for when restricted matching numbers coincide.

pub mod bounded_degree;
pub mod bounds;
pub mod cw;
pub mod diameter;

pub use bounded_degree::{decide_nud_eq_nus_bounded_degree, BoundedDegreeDecision, Route};
pub use bounds::{
    check_bound_chain, compute_s_bound, middle_bound, verify_disequality_certificate,
    BoundChainReport, EdgeBound, SBoundReport,
};
pub use cw::{decide_nu_eq_nus, recognize_cameron_walker, CWDecomposition};
pub use diameter::{
    decide_nu_eq_nudj_diameter2, decide_nu_eq_nudj_small_diameter, DiameterDecision,
    DiameterWitness,
};
