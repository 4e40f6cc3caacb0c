use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty candidate set")]
    EmptyCandidateSet,

    #[error("no link on either side")]
    NoLinkOnEitherSide,

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("inconsistent split data: {0}")]
    InconsistentSplitData(String),

    #[error("level not mergeable: {0}")]
    LevelNotMergeable(String),

    #[error("not a 2-handlebody: {0}")]
    NotA2Handlebody(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("not a #k S1xS2 diagram (torsion obstruction): cokernel {0}")]
    TorsionObstruction(String),

    #[error("geometric intersections required")]
    GeometricRequired,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("quotient data not certified")]
    NotCertified,
}
