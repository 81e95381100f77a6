use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input (`.hg` / `.rep` files).
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Precondition violated by a caller-supplied value.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An edge does not consist of exactly `r` distinct vertices.
    #[error("edge {edge:?}: expected {r} distinct vertices")]
    BadEdge { edge: Vec<u32>, r: usize },
    /// An edge references a vertex outside `[0, n)`.
    #[error("edge {edge:?}: vertex out of range for n = {n}")]
    VertexOutOfRange { edge: Vec<u32>, n: usize },
    /// The same edge appears twice.
    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<u32> },
    /// Linear-mode construction was requested for a non-linear hypergraph.
    #[error("hypergraph is not linear")]
    NotLinear,
    /// Parameter selection produced a threshold of zero.
    #[error("selected parameters degenerate to k = 0 (t = {t}, p = {p})")]
    ParameterUnderflow { t: u64, p: f64 },
    /// A Las Vegas loop ran out of attempts; `detail` carries the last report.
    #[error("gave up after {attempts} attempts: {detail}")]
    RetriesExhausted { attempts: u32, detail: String },
    /// An exact-search cap (ground-set size or vertex count) was hit.
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),
    /// A representation was checked against a hypergraph of different order.
    #[error("vertex count mismatch: hypergraph has {expected}, representation has {got}")]
    VertexCountMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
