use thiserror::Error;

/// Crate-wide error type.
///
/// Input and validation problems are distinguished from numerical failures so
/// callers (notably the CLI) can map them to different exit paths.
#[derive(Debug, Error)]
pub enum Error {
    #[error("facet is empty")]
    EmptyFacet,
    #[error("facet {0:?} contains a duplicate vertex")]
    DuplicateVertexInFacet(Vec<usize>),
    #[error("graph has no vertices")]
    VertexlessGraph,
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("point cloud is empty")]
    EmptyPointCloud,
    #[error("point {0} has dimension {1}, expected {2}")]
    MixedPointDimensions(usize, usize, usize),
    #[error("point {0} has a non-finite coordinate")]
    NonFiniteCoordinate(usize),
    #[error("distance threshold must be positive, got {0}")]
    NonPositiveThreshold(f64),
    #[error("degree {degree} out of range for a complex of dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("heat time must be non-negative, got {0}")]
    NegativeHeatTime(f64),
    #[error("map {perm:?} is not a permutation of 0..{n}")]
    NotPermutation { perm: Vec<usize>, n: usize },
    #[error("vertex map is not simplicial: image of simplex {0:?} is not in the complex")]
    NotSimplicial(Vec<usize>),
    #[error("automorphism acts on {expected} vertices but complex has {actual}")]
    InvalidAutomorphism { expected: usize, actual: usize },
    #[error("complex has {n} vertices, over the automorphism search cap {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("harmonic trace {0} is not within {1} of an integer")]
    NonIntegerTrace(f64, f64),
    #[error("eigensolver failure: {0}")]
    EigensolverFailure(String),
    #[error("ambient dimension must be positive and even, got {0}")]
    BadAmbientDimension(usize),
    #[error("component {label} has dimension {dim}, not below ambient dimension {ambient}")]
    ComponentTooLarge {
        label: String,
        dim: usize,
        ambient: usize,
    },
    #[error("unknown manifold label {0:?}")]
    UnknownManifoldLabel(String),
    #[error("enumeration for ambient dimension {ambient} exceeds budget {budget}")]
    AmbientDimTooLarge { ambient: usize, budget: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
