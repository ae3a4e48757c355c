use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("level_cap must be at least 1")]
    EmptySpectrum,

    #[error("level {level} of {model} has multiplicity {multiplicity}, over the matrix-size budget {budget}")]
    MultiplicityBudget {
        model: String,
        level: usize,
        multiplicity: usize,
        budget: usize,
    },

    #[error("model {model} is spectral-only: it has no pointwise eigenfunction evaluators")]
    SpectralOnly { model: String },

    #[error("no quadrature scheme for model {model}")]
    NoGridScheme { model: String },

    #[error("unknown model id {id:?}")]
    UnknownModel { id: String },

    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    #[error("objects built against different spectra: {left} vs {right}")]
    SpectrumMismatch { left: String, right: String },

    #[error("grid resolution {resolution} is below the required resolution {required} for this spectrum")]
    InsufficientResolution { resolution: usize, required: usize },

    #[error("lambda_max {lambda_max} exceeds the largest retained eigenvalue {retained}")]
    BeyondTruncation { lambda_max: f64, retained: f64 },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("symbol function is not finite at level {level} (lambda = {lambda})")]
    SymbolPole { level: usize, lambda: f64 },

    #[error("invalid parameter: {context}")]
    InvalidParameter { context: String },

    #[error("symbol block {level} is not Hermitian (defect {defect:.3e} > 1e-10)")]
    NotHermitian { level: usize, defect: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-norm {offnorm:.3e})")]
    NoConvergence { sweeps: usize, offnorm: f64 },

    #[error("malformed {format} data: {context}")]
    Format { format: String, context: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(context: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            context: context.into(),
        }
    }

    pub(crate) fn invalid(context: impl Into<String>) -> Self {
        Error::InvalidParameter {
            context: context.into(),
        }
    }
}
