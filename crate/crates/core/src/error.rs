use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph not connected")]
    NotConnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("missing header")]
    MissingHeader,

    #[error("invalid clique-tree recipe: {0}")]
    InvalidRecipe(String),

    #[error("not a clique tree with blocks of size >= {min_block}")]
    NotCliqueTree { min_block: usize },

    #[error("block of size {size} is below the minimum of {min}")]
    BlockTooSmall { size: usize, min: usize },

    #[error("no pendant block: graph has a single block")]
    NoPendantBlock,

    #[error(
        "graph has {n} vertices, above the exhaustive search cap of {cap}; \
         use the block formula for clique trees instead"
    )]
    ExhaustiveCapExceeded { n: usize, cap: usize },

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },

    #[error("invalid (n, k) = ({n}, {k}): need n >= 3 and floor(n/2)+1 <= k <= n-1")]
    InvalidParameters { n: usize, k: usize },

    #[error("n = {0} is too small: need n >= 3")]
    TooFewVertices(usize),

    #[error("(n, k) = ({n}, {k}) is the single-clique boundary case k = n-1")]
    BoundaryCase { n: usize, k: usize },

    #[error("upper bound case 2 needs 3b - a > 0 but it is {value} for (n, k) = ({n}, {k})")]
    Case2NotApplicable { n: usize, k: usize, value: f64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("zero vector")]
    ZeroVector,

    #[error("vector length {got} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("eigensolver did not reach residual {tol:e} (best {residual:e})")]
    NonConvergence { tol: f64, residual: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
