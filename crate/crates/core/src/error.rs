use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The bite boundary has no real point on the requested ray.
    #[error("theta = {theta} rad lies outside the bite arc")]
    Domain { theta: f64 },

    #[error("operation requires a {expected} section")]
    WrongSectionKind { expected: &'static str },

    #[error("quadrature did not converge: estimate {estimate:e}, error bound {error:e}")]
    QuadratureNotConverged { estimate: f64, error: f64 },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
}

impl Error {
    /// Process exit code used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidGeometry(_)
            | Error::InvalidInput(_)
            | Error::WrongSectionKind { .. }
            | Error::DegenerateFit(_) => 2,
            Error::Domain { .. } | Error::QuadratureNotConverged { .. } => 3,
        }
    }
}
