use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("unknown root system label `{0}`")]
    UnknownLabel(String),
    #[error("rank {rank} is out of range for type {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("Weyl group too large: more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("quasi-polynomial needs at least one constituent")]
    EmptyQuasiPolynomial,
    #[error("operator stride must be at least 1")]
    ZeroStride,
    #[error("improper fraction: numerator degree must be below denominator degree")]
    ImproperFraction,
    #[error("denominator factors are not pairwise coprime")]
    FactorsNotCoprime,
    #[error("singular linear system")]
    SingularSystem,
    #[error("interpolation mismatch at t = {t}: series gives {expected}, constituent gives {found}")]
    InterpolationMismatch {
        t: usize,
        expected: String,
        found: String,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
