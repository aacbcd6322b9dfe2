use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("edge vertices must be distinct: {0:?}")]
    DuplicateVertices([u32; 4]),

    #[error("edge {0:?} is not present in the hypergraph")]
    EdgeNotPresent([u32; 4]),

    #[error("hypergraph is complete; no edge can be added")]
    HypergraphComplete,

    #[error("subset size {0} not supported (expected 1..=3)")]
    InvalidSubsetSize(usize),

    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),

    #[error("pattern has {f} vertices, above the supported bound {max}")]
    PatternTooLarge { f: u32, max: u32 },

    #[error("pattern vertex {0} does not appear in any edge")]
    IsolatedPatternVertex(u32),

    #[error("pattern has no edges")]
    EmptyPattern,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance too large for exhaustive enumeration: {0}")]
    EnumerationBound(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
