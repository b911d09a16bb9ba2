//! Numerical laboratory for commutants of analytic Toeplitz operators.

pub mod classify;
pub mod cli;
pub mod complex_json;
pub mod curve;
pub mod error;
pub mod factor;
pub mod opspace;
pub mod symbol;

pub use error::{Error, Result};
pub use num_complex::Complex64;
