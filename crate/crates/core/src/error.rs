use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("l and n are not integers for these parameters")]
    NonIntegral,
    #[error("multiplicity is zero, no physical representation")]
    NotPhysical,
    #[error("weight entry exceeds oracle bound {0}")]
    BoundExceeded(i64),
    #[error("root refinement could not certify separation at tolerance {0}")]
    ToleranceNotMet(f64),
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("vector is not a root of E6")]
    NotARoot,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("linear system is underdetermined")]
    Underdetermined,
    #[error("extraction window is empty")]
    EmptyWindow,
    #[error("Bethe root hits a pole")]
    PoleHit,
    #[error("polynomial has a repeated root")]
    NonSimpleRoots,
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable tag used in structured error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonIntegral => "NonIntegral",
            Error::NotPhysical => "NotPhysical",
            Error::BoundExceeded(_) => "BoundExceeded",
            Error::ToleranceNotMet(_) => "ToleranceNotMet",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotARoot => "NotARoot",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::Underdetermined => "Underdetermined",
            Error::EmptyWindow => "EmptyWindow",
            Error::PoleHit => "PoleHit",
            Error::NonSimpleRoots => "NonSimpleRoots",
            Error::Parse(_) => "Parse",
        }
    }
}
