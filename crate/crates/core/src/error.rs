use thiserror::Error;

/// Errors raised by the combinatorial and cluster engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("letter {letter} is outside the alphabet 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("Lyndon property is undefined for the empty word")]
    EmptyWord,
    #[error("word {0} is not dominant")]
    NotDominant(String),
    #[error("vector has a negative coordinate at position {0}; it is a generalized parameter, not a word")]
    NegativeCoordinate(usize),
    #[error("empty series has no maximal word")]
    EmptySeries,
    #[error("cannot parse word {0:?}")]
    ParseWord(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("direction {k} is not an exchangeable index (1..={n})")]
    BadDirection { k: usize, n: usize },
    #[error("malformed exchange matrix: {0}")]
    BadMatrix(String),
    #[error("invalid quiver: {0}")]
    BadQuiver(String),
    #[error("exchange matrix has rank {rank} < {n}: dominance is only a preorder")]
    RankDeficient { rank: usize, n: usize },
    #[error("division is not exact: {0}")]
    InexactDivision(String),
    #[error("F-polynomial violates its structure theorem: {0}")]
    BadFPolynomial(String),
    #[error("non-dominant parameter produced by mutation in direction {k}: {vector}")]
    NonDominantParameter { k: usize, vector: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
