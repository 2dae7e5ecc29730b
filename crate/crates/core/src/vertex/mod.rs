//! Vertex operators on the vacuum module.

pub mod checks;
pub mod conformal;
pub mod engine;

pub use checks::{
    braiding, creation_check, derivative_check, mode_product_check, mode_product_sides, sjacobi_check, sjacobi_check_with,
    slocality_witness,
    state_grade, weak_assoc_check,
};
pub use conformal::{central_charge, conformal_vector, expected_central_charge, virasoro_check, VirasoroOutcome};
pub use engine::VertexEngine;
