use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("duplicate edge id `{0}`")]
    DuplicateEdgeId(String),

    #[error("edge `{0}` is a half or loose edge and has no sign")]
    UnsignedEdge(String),

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("graphs do not share the same underlying graph: {0}")]
    UnderlyingMismatch(String),

    #[error("edge set is not a forest: edge `{0}` closes a cycle or is not a link")]
    NotAForest(String),

    #[error("forest is not maximal: edge `{0}` joins two of its components")]
    NotMaximal(String),

    #[error("edge `{0}` is not a link; a link graph is required")]
    NotLinkGraph(String),

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid orientation of edge `{0}`: end directions disagree with its sign")]
    InvalidOrientation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("identity check failed: {0}")]
    IdentityFailed(String),
}
