use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("order must lie in (0, 1], got {0}")]
    InvalidOrder(f64),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("quadrature did not converge: {0}")]
    NonConvergence(String),
    #[error("non-finite value encountered: {0}")]
    NonFinite(String),
    #[error("bracket [{0}, {1}] does not straddle a root")]
    NoSignChange(f64, f64),
    #[error("gamma pole at {0}")]
    PoleError(f64),
    #[error("index {index} out of range (max {max})")]
    IndexError { index: usize, max: usize },
    #[error("no closed-form case matches: {0}")]
    UnmatchedCase(String),
    #[error("transform diverges: {0}")]
    Divergent(String),
    #[error("no explicit closed form for this entry: {0}")]
    NotExplicit(String),
    #[error("unknown catalog entry: {0}")]
    UnknownEntry(String),
    #[error("degenerate root of the delta argument at {0}")]
    DegenerateRoot(f64),
    #[error("division too close to zero at {0}")]
    DivisionNearZero(f64),
    #[error("series truncated before convergence: {0}")]
    TruncationWarning(String),
    #[error("i/o error: {0}")]
    Io(String),
}
