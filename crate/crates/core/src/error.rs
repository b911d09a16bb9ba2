use thiserror::Error;

/// Errors raised by symbol construction, measurements and operator solves.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("inner map of a composition leaves the disk (estimated sup-norm {sup:.6})")]
    CompositionDomain { sup: f64 },

    #[error(
        "{nodes} circle nodes cannot resolve a series of order {order} (need at least {needed})"
    )]
    Resolution {
        nodes: usize,
        order: usize,
        needed: usize,
    },

    #[error("target lies on the curve (distance {distance:.3e})")]
    OnCurve { distance: f64 },

    #[error("refinement cap reached with winding residual {residual:.3e}")]
    ResolutionExhausted { residual: f64 },

    #[error("winding count {winding} disagrees with interior root count {roots}")]
    OracleMismatch { winding: i64, roots: usize },

    #[error("no usable samples in the winding profile")]
    EmptyProfile,

    #[error("symbol is constant")]
    ConstantSymbol,

    #[error("root at |z| = {modulus:.12} is too close to the unit circle")]
    BoundaryZero { modulus: f64 },

    #[error("operation requires a polynomial symbol of degree at most {cap}")]
    UnsupportedSymbol { cap: usize },

    #[error("least-squares system is ill-conditioned (condition estimate {condition:.3e})")]
    IllConditioned { condition: f64 },

    #[error("matrix dimension {requested} exceeds available symbol order {order}")]
    OrderMismatch { requested: usize, order: usize },

    #[error("matrix dimension {dim} exceeds the commutant solver cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("operator does not commute with the Toeplitz matrix (defect {defect:.3e})")]
    NotACommutantElement { defect: f64 },

    #[error("dilation parameter has modulus {modulus}, expected 1")]
    NotUnimodular { modulus: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Whether the error comes from a numerical measurement rather than bad input.
    pub fn is_measurement_failure(&self) -> bool {
        matches!(
            self,
            Error::OnCurve { .. }
                | Error::ResolutionExhausted { .. }
                | Error::OracleMismatch { .. }
                | Error::EmptyProfile
                | Error::BoundaryZero { .. }
                | Error::IllConditioned { .. }
                | Error::NotACommutantElement { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
