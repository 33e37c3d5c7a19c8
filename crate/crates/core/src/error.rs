use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no edges")]
    NoEdges,
    #[error("an edge cannot be compared with itself")]
    SameEdge,
    #[error("graph is not bipartite (odd cycle {0:?})")]
    NotBipartite(Vec<usize>),
    #[error("coloring does not cover every edge: expected {expected} colors, got {got}")]
    PartialColoring { expected: usize, got: usize },
    #[error("color values must be positive")]
    ZeroColor,
    #[error("coloring is not injective")]
    NotInjective,
    #[error("vertex coloring is not a star coloring")]
    NotStarColoring,
    #[error("graph has more than {limit} edges")]
    TooLarge { limit: usize },
    #[error("graph is not a path or a cycle")]
    NotPathOrCycle,
    #[error("graph is not a forest")]
    NotForest,
    #[error("maximum degree {0} is too small for this method")]
    DegreeTooSmall(usize),
    #[error("maximum degree {0} is too large for this method")]
    DegreeTooLarge(usize),
    #[error("graph has an isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no reducible configuration found on a graph with {edges} edges")]
    ReductionStalled { edges: usize },
    #[error("internal invariant failed: {0}")]
    Invariant(String),
    #[error("unknown corpus graph `{0}`")]
    UnknownName(String),
    #[error("fixture `{name}` fails its structural check: {reason}")]
    FixtureError { name: String, reason: String },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("format violation: {0}")]
    FormatViolation(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
