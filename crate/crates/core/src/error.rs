use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix: expected {expected} entries, got {got}")]
    Ragged { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` has no assigned value")]
    UnassignedVariable(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("negative edge length {0}")]
    NegativeLength(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("point maps to infinity (S1*(X) = 0)")]
    PointAtInfinity,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("slope t satisfies t^2 = alpha; the line is parallel to an asymptote")]
    ParallelSlope,
    #[error("zero input has no square class")]
    ZeroInput,
    #[error("face {0} has zero Heron value; square class undefined")]
    ZeroFaceHeron(String),
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
