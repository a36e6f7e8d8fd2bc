use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("cannot intersect an empty list of graphs")]
    EmptyIntersection,
    #[error("vertex count mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("root {0} is a leaf; a tree on at least 3 vertices needs a non-leaf root")]
    LeafRoot(usize),
    #[error("layer index {i} out of range for k = {k}")]
    LayerOutOfRange { i: usize, k: usize },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: String, hi: String },
    #[error("box for vertex {vertex} has {found} intervals, expected {expected}")]
    Dimension {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("endpoint {0} does not fit the endpoint type")]
    EndpointOverflow(usize),
    #[error("invalid leaf root: {0}")]
    InvalidLeafRoot(String),
    #[error("map is not injective: vertices {0} and {1} share an image")]
    NotInjective(usize, usize),
    #[error("value too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
