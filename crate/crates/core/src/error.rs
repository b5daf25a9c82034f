use thiserror::Error;

/// Errors raised by the library. Property failures (an improper coloring
/// handed to `check_z`, say) are reported as [`crate::verify::Verdict`]s
/// instead; this type covers malformed input and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid record: {0}")]
    Record(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("coloring has {got} entries but the graph has {n} vertices")]
    NotTotal { got: usize, n: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    Improper(usize, usize),

    #[error("coloring is not a Grundy coloring: vertex {vertex} lacks color {missing}")]
    NotGrundy { vertex: usize, missing: u32 },

    #[error("coloring is not color-dominating: class {0} has no dominating vertex")]
    NotDominating(u32),

    #[error("graph has {n} vertices, over the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("parameter {value} is out of range: {msg}")]
    OutOfRange { value: usize, msg: String },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
