//! Exact scalars, graded quivers, tensor elements and exact linear algebra.

mod linsys;
mod scalar;
mod tensor;

pub use linsys::{Echelon, LinearSystem};
pub use scalar::{Field, Scalar};
pub use tensor::{
    apply_blockwise, apply_graded_op, GenId, Generator, GradedQuiver, SignConvention,
    TensorElement,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("invalid field: {0}")]
    BadField(String),
    #[error("invalid scalar: {0}")]
    BadScalar(String),
    #[error("unknown object: {0}")]
    UnknownObject(String),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("degree/path mismatch: {0}")]
    Mismatch(String),
}
