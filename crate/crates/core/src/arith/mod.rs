//! Exact scalars, truncated series, coefficient windows and linear algebra.

pub mod halfint;
pub mod rank;
pub mod scalar;
pub mod series;
pub mod window;

pub use halfint::HalfInt;
pub use rank::{exact_rank, Echelon, SparseVec};
pub use scalar::{binom, binom_scalar, Scalar};
pub use series::{TruncSeries, Var};
pub use window::{box_points, expand_two_var, Cell, CoeffWindow, Payload, Region, WindowDiff};
