use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: char, rank: usize },

    #[error("unknown Lie type {0:?}")]
    UnknownType(String),

    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("weight has {got} coordinates, expected {expected}")]
    WrongLength { expected: usize, got: usize },

    #[error("{0} is not in the Deligne exceptional series")]
    NonDeligneType(String),

    #[error("critical level k = -h^vee = {0}")]
    CriticalLevel(String),

    #[error("subspace is not stable under ad {0}")]
    UnstableSubspace(String),

    #[error("expected a {expected}-dimensional solution space, found dimension {got}")]
    SolutionSpace { expected: usize, got: usize },

    #[error("invariant forms are not proportional on summand {summand}: {detail}")]
    InconsistentLevel { summand: usize, detail: String },

    #[error("no summand g_{index} in g^natural of {ty}")]
    NoSuchSummand { ty: String, index: usize },

    #[error("vector is not annihilated by the raising operators: {0}")]
    NotHighestWeight(String),

    #[error("image is not proportional to the predicted vector: {0}")]
    Proportionality(String),

    #[error("degree {degree} exceeds the PBW degree budget {budget}")]
    BudgetExceeded { degree: usize, budget: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("root finding failed: {0}")]
    RootFinding(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
