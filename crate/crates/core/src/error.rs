use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors; they
/// are reported through [`crate::report::Report`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation requires a field; coefficient mode {0} does not support it")]
    UnsupportedMode(String),

    #[error("division by a non-invertible coefficient")]
    NotInvertible,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("quotient did not certify as finite dimensional below D = {dmax} (last dimension {last_dimension})")]
    NotArtinianWithinBound { dmax: u32, last_dimension: usize },

    #[error("module is projective")]
    Projective,

    #[error("module is zero")]
    ZeroModule,

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceCap { what: String, needed: String, cap: String },

    #[error("invalid test ring: {0}")]
    InvalidRing(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn cap(what: impl Into<String>, needed: impl ToString, cap: impl ToString) -> Self {
        Error::ResourceCap {
            what: what.into(),
            needed: needed.to_string(),
            cap: cap.to_string(),
        }
    }
}
