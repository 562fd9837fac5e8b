use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("total absolute weight exceeds 2^62")]
    WeightOverflow,
    #[error("empty block in contraction")]
    EmptyBlock,
    #[error("invalid S-bar contraction: {0}")]
    InvalidContraction(String),
    #[error("invalid layout: {0}")]
    InvalidLayout(String),
    #[error("layout parse error at byte {pos}: {msg}")]
    LayoutParse { pos: usize, msg: String },
    #[error("unknown tree node {0}")]
    UnknownNode(usize),
    #[error("layout has {layout} leaves but graph has {graph} vertices")]
    LayoutSizeMismatch { layout: usize, graph: usize },
    #[error("interval model disagrees with graph at pair ({0}, {1})")]
    IntervalMismatch(usize, usize),
    #[error("interval layout has a cut with induced matching of size {0}")]
    IntervalWidth(usize),
    #[error("set is not contained in the side of the cut")]
    NotInSide,
    #[error("tables to merge overlap")]
    OverlappingTables,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("instance too large for exhaustive oracle: n = {n}, limit {limit}")]
    SizeGuard { n: usize, limit: usize },
    #[error("multiway cut needs at least two terminals, got {0}")]
    TooFewTerminals(usize),
    #[error("no multiway cut exists: terminals {0} and {1} are adjacent")]
    AdjacentTerminals(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
