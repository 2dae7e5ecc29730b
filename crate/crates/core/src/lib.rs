pub mod arith;
pub mod deformation;
pub mod error;
pub mod qalgebra;
pub mod qyb;
pub mod report;
pub mod vacuum;
pub mod vertex;

pub use error::{QvaError, Result};
pub use report::{CheckReport, Status};
