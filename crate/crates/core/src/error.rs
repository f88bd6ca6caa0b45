use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("vertex set is not strictly increasing")]
    UnsortedVertexSet,
    #[error("label table invalid: {0}")]
    InvalidLabels(String),
    #[error("graph has no labels")]
    MissingLabels,
    #[error("pair must consist of two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("operation requires at least two vertices")]
    TrivialGraph,
    #[error("vertices {0} and {1} are adjacent; no vertex separator exists")]
    AdjacentPair(usize, usize),
    #[error("vertex {vertex} has degree {degree} < {k}")]
    DegreeBelowK { vertex: usize, degree: usize, k: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{what} is not a permutation of 0..{p}")]
    NotBijective { what: &'static str, p: usize },
    #[error("graph6: {reason} at byte {position}")]
    Graph6 { reason: &'static str, position: usize },
    #[error("vertex set does not separate {0} from {1}")]
    NotSeparating(usize, usize),
    #[error("instance of order {n} exceeds the brute-force limit {limit}")]
    BruteForceLimit { n: usize, limit: usize },
    #[error("invalid window [{lo}, {hi}] for p = {p}")]
    InvalidWindow { lo: i64, hi: i64, p: usize },
    #[error("demand must be positive")]
    ZeroDemand,
    #[error("path system invalid: {0}")]
    InvalidPathSystem(String),
    #[error("witness segment {segment} failed: {detail}")]
    SegmentFailed { segment: &'static str, detail: String },
    #[error("graph of order {found} in a stream expected to have order {expected}")]
    OrderMismatch { expected: usize, found: usize },
}
