pub mod actions;
pub mod algebra;
pub mod catalog;
pub mod duality;
pub mod envelope;
pub mod error;
pub mod format;
pub mod linalg;
pub mod morita;
pub mod partial_rep;
pub mod pipeline;
pub mod report;
pub mod scalar;
pub mod smash;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace, Tensor3, Vector};
pub use report::{Check, Status, VerificationReport};
pub use scalar::{Field, Scalar};
