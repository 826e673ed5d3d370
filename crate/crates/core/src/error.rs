use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("expected two distinct vertices, got `{0}` twice")]
    SameVertex(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("support graph of `{vertex}` contains a cycle")]
    NotForest { vertex: String },
    #[error("construction needs at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("vertex label `{0}` collides with a label added by the construction")]
    ReservedLabel(String),
    #[error("no appendix graph {0} (expected 1, 2 or 3)")]
    InvalidAppendix(u8),
    #[error("census size {0} out of range (expected 1..={max})", max = crate::census::MAX_CENSUS_SIZE)]
    CensusRange(usize),
    #[error("coverage size {0} out of range (expected 1..=4)")]
    CoverageRange(usize),
}
