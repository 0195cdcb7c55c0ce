use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum QsfError {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("frame is not orthonormal: max Gram residual {residual:.3e}")]
    FrameNotOrthonormal { residual: f64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("subspace is not slant: residual {residual:.3e}")]
    NotSlant { residual: f64 },

    #[error("degenerate slant angle: {0}")]
    DegenerateAngle(String),

    #[error("parameter out of range: {0}")]
    InvalidParameter(String),

    #[error("vector not contained in section: residual {residual:.3e}")]
    NotContained { residual: f64 },

    #[error("point too close to chart boundary: need margin {needed:.3e}, have {available:.3e}")]
    BoundaryMargin { needed: f64, available: f64 },

    #[error("chart differential is rank deficient: min singular value {0:.3e}")]
    RankDeficient(f64),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("unknown id: {0}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, QsfError>;
