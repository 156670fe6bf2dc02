use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// `Applicability` covers every guard that mirrors a hypothesis of one of the
/// closed forms (callers are pointed at the unconditional matrix route), while
/// the remaining variants are structural misuse of a specific operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex index is not smaller than the vertex count.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// Loops are not allowed in simple graphs or multigraphs.
    #[error("loop edge ({0}, {0}) rejected")]
    LoopEdge(usize),

    /// Duplicate edge in a simple graph.
    #[error("duplicate edge ({0}, {1}) in a simple graph")]
    DuplicateEdge(usize, usize),

    /// The requested edge is absent from a multigraph.
    #[error("edge ({0}, {1}) not present")]
    EdgeNotPresent(usize, usize),

    /// An edge move needs three pairwise distinct vertices.
    #[error("edge move requires distinct vertices, got ({0}, {1}, {2})")]
    VerticesNotDistinct(usize, usize, usize),

    /// The subset-enumeration oracle only runs on small graphs.
    #[error("graph has {vertices} vertices, oracle is capped at {cap}; use the closed forms")]
    OracleTooLarge { vertices: usize, cap: usize },

    /// A hypothesis of one of the closed forms does not hold for this input.
    #[error("{0}")]
    Applicability(String),

    /// A degree vector fails its defining constraints.
    #[error("invalid degree vector: {0}")]
    InvalidDegreeVector(String),

    /// A vector claimed to arise from a construction turned out not to.
    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    /// Conversion produced a negative coefficient: the input is not the Betti
    /// vector of a module with 2-linear resolution.
    #[error("not a valid 2-linear Betti vector: coefficient c_{index} = {value} is negative")]
    NegativeCoefficient { index: usize, value: String },

    /// Conversion produced a sequence violating the anti-lecture-hall chain.
    #[error("not a valid 2-linear Betti vector: the converted composition fails the chain bound")]
    NotAntiLectureHall,

    /// The greedy peeling loop got stuck on a nonzero table.
    #[error("table not decomposable by greedy chain: {0}")]
    NotDecomposable(String),

    /// A degree sequence must be strictly increasing and non-negative.
    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),
}
