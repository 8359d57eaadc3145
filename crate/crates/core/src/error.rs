use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector is not a member of the subspace")]
    NotAMember,

    #[error("ambient dimension {ambient} (degree {degree}) exceeds the resource cap {cap}")]
    ResourceCap { degree: usize, ambient: usize, cap: usize },

    #[error("unsupported homogeneous degree {0}; relations must have degree at least 2")]
    UnsupportedDegree(usize),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("automorphism matrix is singular")]
    SingularAutomorphism,

    #[error("automorphism does not preserve the relation space")]
    RelationsNotPreserved,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: relations are not homogeneous of a common degree ({message})")]
    Inhomogeneous { line: usize, message: String },

    #[error("line {line}: unknown generator `{name}`")]
    UnknownGenerator { line: usize, name: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable short code, printed by the command line tool.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "E-DIM",
            Error::NotAMember => "E-MEMBER",
            Error::ResourceCap { .. } => "E-CAP",
            Error::UnsupportedDegree(_) => "E-DEGREE",
            Error::InvalidPresentation(_) => "E-PRESENTATION",
            Error::InvalidField(_) => "E-FIELD",
            Error::SingularAutomorphism => "E-AUT-SINGULAR",
            Error::RelationsNotPreserved => "E-AUT-RELATIONS",
            Error::InvalidArgument(_) => "E-ARG",
            Error::Syntax { .. } => "E-SYNTAX",
            Error::Inhomogeneous { .. } => "E-INHOMOGENEOUS",
            Error::UnknownGenerator { .. } => "E-UNKNOWN-GEN",
            Error::Internal(_) => "E-INTERNAL",
        }
    }
}
