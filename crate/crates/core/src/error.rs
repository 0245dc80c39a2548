//! Error type shared by every fallible operation in the crate.

use thiserror::Error;

/// Everything that can go wrong while building graphs, parsing inputs, or
/// running a verification.
///
/// The split matters for the command-line tool: input problems (bad files,
/// out-of-range vertices, malformed parameters) map to exit code 2, while a
/// theorem check that ran fine but found a discrepancy maps to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    /// A vertex id at or beyond the graph order.
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    /// Self-loops are rejected: the graphs here are simple by definition.
    #[error("self-loop at vertex {0} (graphs must be simple)")]
    SelfLoop(usize),

    /// The same edge added or listed twice.
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),

    /// A vertex function assigned the same value to two vertices.
    #[error("function is not injective: vertices {0} and {1} both map to {2}")]
    NotInjective(usize, usize, String),

    /// A simplex listed the same vertex twice.
    #[error("repeated vertex {0} in simplex")]
    RepeatedVertex(usize),

    /// A complex was cut off at a dimension cap, so top-degree data is
    /// incomplete and any alternating sum over it would be silently wrong.
    #[error("complex was truncated at dimension {0}; refusing to use incomplete counts")]
    Truncated(usize),

    /// A form or chain handed to an operation expecting a different degree,
    /// or whose coefficient vector does not match the complex layer.
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    /// An exhaustive search refused to start because the instance is too big.
    #[error("graph on {order} vertices exceeds the exhaustive-search limit of {limit}")]
    TooLarge { order: usize, limit: usize },

    /// A structural precondition for an orientation/boundary operation failed
    /// (complex not pure, a face shared by three or more top simplices, ...).
    #[error("not a geometric complex: {0}")]
    NotGeometric(String),

    /// Bad parameters for a named graph family.
    #[error("generator error: {0}")]
    Generator(String),

    /// A text input that could not be parsed, with its 1-based line number.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Any other invalid input (wrong function length, missing vertices, ...).
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
