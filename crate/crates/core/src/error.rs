use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected; eccentricity is undefined")]
    Disconnected,
    #[error("single-vertex graph has eccentricity 0; the index is undefined")]
    ZeroEccentricity,
    #[error("result would have {0} vertices, above the cap of {max}", max = crate::graph::MAX_VERTICES)]
    TooLarge(u128),
    #[error("join of an empty list of graphs")]
    EmptyJoin,
    #[error("not a permutation of the vertex set")]
    BadPermutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("parameter {name} = {value} outside its domain ({domain})")]
    Domain {
        name: &'static str,
        value: usize,
        domain: &'static str,
    },
    #[error("edge and vertex count lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("empty parameter list")]
    EmptyList,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("malformed family spec `{0}`")]
    Malformed(String),
    #[error("{family}: {reason}")]
    Domain { family: &'static str, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: byte {byte:#04x} at offset {offset} is not printable graph6")]
    BadByte { byte: u8, offset: usize },
    #[error("graph6: truncated input")]
    Truncated,
    #[error("graph6: {0} trailing bytes")]
    Trailing(usize),
    #[error("graph6: nonzero padding bits")]
    Padding,
    #[error("graph6: order {0} exceeds the supported maximum 258047")]
    TooLarge(usize),
    #[error("edge list: missing `n <count>` header")]
    MissingHeader,
    #[error("edge list line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
