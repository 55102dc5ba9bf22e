use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rotation at vertex {0} does not alternate between outgoing and incoming slots")]
    AlternationViolation(String),
    #[error("edge {0} has a missing, unknown or misplaced half-edge")]
    DanglingHalfEdge(String),
    #[error("a slot of edge {0} appears more than once")]
    DuplicateSlot(String),
    #[error("vertex {0} has no incident edges")]
    IsolatedVertex(String),
    #[error("vertex {0} has odd degree")]
    OddDegree(String),
    #[error("component has non-integer genus (Euler sum {0})")]
    NonIntegerGenus(i64),
    #[error("permutation triple does not compose to the identity")]
    ProductNotIdentity,
    #[error("edges {0} and {1} are not a successor pair")]
    NotSuccessorPair(String, String),
    #[error("a face of size one blocks the contraction")]
    FaceOfSizeOne,
    #[error("size {size} exceeds the configured bound {bound}")]
    SizeBoundExceeded { size: usize, bound: usize },
    #[error("parameter {0} is still a free symbol")]
    SymbolicEntry(String),
    #[error("parameter conditions violated: {0:?}")]
    ConditionsViolated(Vec<String>),
    #[error("regime constraint violated: {0}")]
    RegimeConstraintViolated(String),
    #[error("parameters match none of the degenerate regimes")]
    NoMatchingRegime,
    #[error("invariant is not well defined (orderings {first:?} and {second:?} differ)")]
    NotWellDefined {
        first: Vec<String>,
        second: Vec<String>,
    },
    #[error("dimap is not c-alternating")]
    NotCAlternating,
    #[error("the chosen corner lies on a clockwise face")]
    ClockwiseCorner,
    #[error("blocks lie in different components")]
    DifferentComponents,
    #[error("edge {0} is a proper semiloop of more than one type")]
    MultiSemiloop(String),
    #[error("no reduction sequence found")]
    NotFound,
    #[error("format error: {0}")]
    FormatError(String),
    #[error("io error: {0}")]
    IoError(String),
    #[error("edge {0} is not a triloop")]
    NotATriloop(String),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
