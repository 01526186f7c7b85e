pub mod catalog;
pub mod classify;
pub mod error;
pub mod ideal;
pub mod label;
pub mod linalg;
pub mod net;
pub mod pencil;
pub mod poly;
pub mod scalar;
pub mod scheme;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use tensor::Tensor3;
pub use label::CollineationLabel;
