use thiserror::Error;

/// Errors raised by every module of the library.
///
/// Each variant has a stable machine-readable name, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cosec of half the zero angle is undefined")]
    ZeroAngle,
    #[error("cot of half the zero angle is a pole")]
    PoleAngle,
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("value is not real: {0}")]
    NotReal(String),
    #[error("invalid angle: {0}")]
    InvalidAngle(String),
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not symplectic: entry ({row}, {col}) of A^T J A - J is {value}")]
    NotSymplectic { row: usize, col: usize, value: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("label {label} is not a unit mod {d}")]
    NotTotallyRamified { label: u32, d: u32 },
    #[error("pairing is not unimodular: {0}")]
    NotUnimodular(String),
    #[error("bad cover spec: {0}")]
    BadSpec(String),
    #[error("invalid generator word: {0}")]
    InvalidWord(String),
    #[error("invalid input data: {0}")]
    InvalidData(String),
    #[error("branch trajectories {0} and {1} collide")]
    Collision(usize, usize),
    #[error("section value too close to zero on the loop: {0}")]
    NonVanishingViolated(String),
    #[error("internal model check failed: {0}")]
    ModelInconsistent(String),
}

impl Error {
    /// Stable identifier used in JSON reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroAngle => "ZeroAngle",
            Error::PoleAngle => "PoleAngle",
            Error::NotRational(_) => "NotRational",
            Error::NotReal(_) => "NotReal",
            Error::InvalidAngle(_) => "InvalidAngle",
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::NotSymplectic { .. } => "NotSymplectic",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotTotallyRamified { .. } => "NotTotallyRamified",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::BadSpec(_) => "BadSpec",
            Error::InvalidWord(_) => "InvalidWord",
            Error::InvalidData(_) => "InvalidData",
            Error::Collision(..) => "Collision",
            Error::NonVanishingViolated(_) => "NonVanishingViolated",
            Error::ModelInconsistent(_) => "ModelInconsistent",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
