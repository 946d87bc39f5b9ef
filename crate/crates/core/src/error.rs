use thiserror::Error;

/// Errors reported by parsing, construction, and witness translation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input document; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A vertex index does not exist in the host graph.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// Sun orders below 3 are undefined.
    #[error("sun order must be at least 3, got {t}")]
    OrderTooSmall { t: usize },

    /// The f-gadget requires a triangle-free source graph.
    #[error("source graph contains triangle {{{a}, {b}, {c}}}")]
    NotTriangleFree { a: u32, b: u32, c: u32 },

    /// The f-gadget is only defined for k >= 4.
    #[error("gadget parameter k must be at least 4, got {k}")]
    KTooSmall { k: usize },

    /// A witness failed structural verification against its host graph.
    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    /// An operation precondition does not hold (wrong size, not a clique, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A consequence that the gadget constructions guarantee failed to hold.
    ///
    /// This is the loud channel for counterexamples: if it ever fires on an
    /// honestly constructed instance, the equivalence the gadget exists to
    /// witness is wrong.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
