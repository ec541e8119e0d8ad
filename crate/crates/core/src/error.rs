use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("unknown {kind} `{name}`")]
    UnknownVariant { kind: &'static str, name: String },

    #[error(
        "integrator exceeded {max_steps} steps at t = {t_reached:.6e} (achieved error estimate {achieved_tol:.3e})"
    )]
    StepLimit {
        max_steps: usize,
        t_reached: f64,
        achieved_tol: f64,
    },

    #[error("axis `{parameter}` is not applicable: {reason}")]
    InapplicableAxis { parameter: &'static str, reason: String },

    #[error("scan failed at {coords:?}: {source}")]
    SampleFailure {
        coords: Vec<f64>,
        #[source]
        source: Box<Error>,
    },

    #[error("slope unresolvable: {0}")]
    UnresolvableSlope(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for failures of the numerics (integration, fits) rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::StepLimit { .. } | Error::UnresolvableSlope(_) => true,
            Error::SampleFailure { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}
