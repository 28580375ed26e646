use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow")]
    Overflow,
    #[error("order mismatch: d = {left} vs d = {right}")]
    ContextMismatch { left: i64, right: i64 },
    #[error("({x}, {y}) is not in O_D for d = {d}: components differ mod d")]
    NotInOrder { d: i64, x: i64, y: i64 },
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("zero module")]
    ZeroModule,
    #[error("module has rank 1 (n = {n}, a = {a}, m = {m})")]
    DegenerateRank { n: i64, a: i64, m: i64 },
    #[error("[{n}; {a} + {m}w] is not an ideal")]
    NotAnIdeal { n: i64, a: i64, m: i64 },
    #[error("principal ideal of a zero divisor is not regular")]
    ZeroDivisorIdeal,
    #[error("ideal component at {p} is not of the form (p)^e or (p)^e[p;w]")]
    FactorizationAmbiguous { p: i64 },
    #[error("enumeration bound {bound} exceeded ({what})")]
    BoundExceeded { bound: u64, what: &'static str },
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("subgroup of SL2(F_{p}) generated by unipotents has order {order}")]
    CorollaryViolated { p: i64, order: usize },
    #[error("invalid L-shape L({m},{n}): both arms need length >= 2")]
    InvalidShape { m: i64, n: i64 },
    #[error("theta characteristic is even")]
    NotOdd,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("homology map does not preserve the intersection form")]
    NotSymplectic,
    #[error("homology map does not preserve the splitting")]
    SummandNotPreserved,
    #[error("catalog validation failed: {0}")]
    ValidationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}
