use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("partition {partition} has more than {r} parts")]
    TooManyParts { partition: String, r: usize },
    #[error("dominance is only compared within one weight ({left} vs {right})")]
    WeightMismatch { left: u32, right: u32 },
    #[error("number of variables differs ({left} vs {right})")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("truncation degrees differ ({left} vs {right})")]
    TruncationMismatch { left: usize, right: usize },
    #[error("d must be a positive rational, got {0}")]
    NonPositiveD(String),
    #[error("omega entries must be nonzero")]
    ZeroOmega,
    #[error("{0} is not a partition after adding a box")]
    NotAddable(String),
    #[error("eigenvalue collision between {0} and {1}")]
    PivotCollision(String, String),
    #[error("interpolation system for {0} is singular")]
    SingularSystem(String),
    #[error("polynomial division left a nonzero remainder ({0})")]
    InexactDivision(&'static str),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("zero denominator in {0}")]
    ZeroDenominator(&'static str),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
