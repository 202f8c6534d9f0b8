use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("Seifert matrix has odd dimension {0}")]
    OddDimension(usize),
    #[error("det(A^T - A) = {0}, expected 1")]
    NotUnimodularIntersection(String),
    #[error("operation needs a nonempty Seifert matrix (genus >= 1)")]
    EmptyMatrix,
    #[error("zero polynomial has no resultant")]
    ZeroPolynomial,
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cokernel has a free part; branched cover homology is infinite")]
    InfiniteHomology,
    #[error("not a metabolizer: {0}")]
    NotMetabolizer(String),
    #[error("splitting hypotheses fail: {0}")]
    HypothesisViolation(String),
    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    GroupTooLarge { order: String, bound: u64 },
    #[error("twist parameter k = {0} < 0 has no lens-space model")]
    NegativeK(i64),
    #[error("lens space parameters p = {p}, q = {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("no sign/affine relabeling matches the closed form for k = {0}")]
    NoAlignment(i64),
    #[error("no correction table available for this knot; supply one with --table")]
    MissingTable,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("correction table: {0}")]
    Table(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
