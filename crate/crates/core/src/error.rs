use thiserror::Error;

use crate::graph::{Edge, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("edge {}-{} is not in the graph", .0.0, .0.1)]
    EdgeNotInGraph(Edge),

    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: malformed header byte {0:#04x}")]
    Graph6Header(u8),
    #[error("graph6: order above 62 (long form) is not supported")]
    Graph6LongForm,
    #[error("graph6: non-printable byte {byte:#04x} at position {position}")]
    Graph6NonPrintable { position: usize, byte: u8 },
    #[error("graph6: truncated bit field (expected {expected} bytes, found {found})")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: {0} trailing bytes after bit field")]
    Graph6Trailing(usize),
    #[error("graph6: nonzero padding bits")]
    Graph6Padding,
    #[error("graph6: order {0} exceeds the short-form limit of 62")]
    Graph6TooLarge(usize),

    #[error("edge list, line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("order {order} exceeds the supported cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not minimally 2-connected")]
    NotMinimallyTwoConnected,
    #[error("graph is a cycle")]
    IsCycle,
    #[error("structural assertion failed: {0}")]
    StructureViolation(String),
    #[error("expected {expected} attachments, got {found}")]
    AttachmentMismatch { expected: usize, found: usize },
    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(Vertex),
    #[error("enumeration cap exceeded after {count} spanning trees")]
    CapExceeded { count: usize },
    #[error("no anti-Kekulé set of size at most {max_k}")]
    BoundExhausted { max_k: usize },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}
