//! Nonconstant exchange factors `q_ij(x)` realized by dressing the fields of the
//! constant vacuum module with pseudo-automorphisms.

pub mod dressed;
pub mod filtration;
pub mod presets;
pub mod relations;
pub mod spec;

pub use dressed::{dressed_mode, phi_apply, with_sufficient_order, DressedGen, DressedModel, SeriesState};
pub use filtration::{filtration_e_check, filtration_f, gr_compare, half_basis_check, FiltrationLevel, GrOutcome, GrRow};
pub use presets::{preset, PRESET_NAMES};
pub use relations::{phi_commute_check, phi_inverse_check, phi_law_check, series_coeff, zf_relation_check};
pub use spec::{build_qx, QSeriesSpec};
