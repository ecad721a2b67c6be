use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bundle rank must be at least 2, got {0}")]
    RankTooSmall(String),
    #[error(
        "odd sphere S^{sphere_dim} has K^0 = Z, so the K-class parameter must be 0 (got {euler})"
    )]
    OddSphereNonzeroClass { sphere_dim: String, euler: String },
    #[error("sphere dimension must be positive, got {0}")]
    NonpositiveDimension(String),
    #[error("sphere dimensions differ: S^{0} vs S^{1}")]
    DimensionMismatch(String, String),
    #[error("bundle ranks differ: {0} vs {1}")]
    RankMismatch(String, String),
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(String, String),
    #[error("matrix has {rows}x{cols} shape but {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
