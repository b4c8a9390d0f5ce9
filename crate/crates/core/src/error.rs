use alloc::string::String;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("letter s{letter} out of range for rank {n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("box ({row},{col}) is outside the staircase for rank {n}")]
    BoxOutOfRange { row: usize, col: usize, n: usize },
    #[error("rank {n} exceeds the enumeration limit {limit}")]
    RankLimit { n: usize, limit: usize },
    #[error("complex is not pure")]
    NotPure,
    #[error("invalid edge ({0},{1})")]
    InvalidEdge(usize, usize),
    #[error("graph contains a cycle")]
    Cyclic,
    #[error("edges ({i},{j}) and ({j},{k}) are not both present")]
    PairAbsent { i: usize, j: usize, k: usize },
    #[error("pipe dream is not a reduced pipe dream for {0}")]
    NotReducedFor(Permutation),
    #[error("realization check failed: {0}")]
    Realization(String),
    #[error("parse error: {0}")]
    Parse(String),
}
