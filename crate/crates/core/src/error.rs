use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("t-adic order of zero is undefined")]
    UndefinedOrder,
    #[error("denominator vanishes at q={q}, t={t}")]
    PoleAtPoint { q: String, t: String },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRank { index: usize, rank: usize },
    #[error("negative exponent of x{var} cannot be sent to zero")]
    NegativeExponentAtZero { var: usize },
    #[error("divided difference by x{i}-x{j} left a remainder")]
    InexactDivision { i: usize, j: usize },
    #[error("signature violation: {0}")]
    SignatureViolation(String),
    #[error("joint eigenspace has dimension {dim}, expected 1")]
    NonGenericEigenspace { dim: usize },
    #[error("cannot embed rank {from} into smaller rank {to}")]
    RankDecrease { from: usize, to: usize },
    #[error("truncation to {to} variables is below the rank {rank}")]
    RankTooSmall { rank: usize, to: usize },
    #[error("limit window needs at least 3 points, got {0}")]
    WindowTooSmall(usize),
    #[error("d- is undefined at node 0")]
    EmptyRankForDminus,
    #[error("arrow starts at node {expected} but the element has rank {got}")]
    NodeMismatch { expected: usize, got: usize },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown symbol '{name}' at byte {offset}")]
    UnknownSymbol { name: String, offset: usize },
    #[error("variable index {index} exceeds rank {rank}")]
    RankViolation { index: usize, rank: usize },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::UndefinedOrder => "UndefinedOrder",
            Error::PoleAtPoint { .. } => "PoleAtPoint",
            Error::IndexOutOfRank { .. } => "IndexOutOfRank",
            Error::NegativeExponentAtZero { .. } => "NegativeExponentAtZero",
            Error::InexactDivision { .. } => "InexactDivision",
            Error::SignatureViolation(_) => "SignatureViolation",
            Error::NonGenericEigenspace { .. } => "NonGenericEigenspace",
            Error::RankDecrease { .. } => "RankDecrease",
            Error::RankTooSmall { .. } => "RankTooSmall",
            Error::WindowTooSmall(_) => "WindowTooSmall",
            Error::EmptyRankForDminus => "EmptyRankForDminus",
            Error::NodeMismatch { .. } => "NodeMismatch",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnknownSymbol { .. } => "UnknownSymbol",
            Error::RankViolation { .. } => "RankViolation",
            Error::Usage(_) => "Usage",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
