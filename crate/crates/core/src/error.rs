use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree tuple must contain at least one degree")]
    EmptyDegrees,
    #[error("cannot parse degree tuple {0:?}")]
    ParseDegrees(String),
    #[error("product of an empty list of characters")]
    EmptyProduct,
    #[error("Laurent polynomial is not symmetric under q -> 1/q")]
    NotSymmetric,
    #[error("Laurent polynomial mixes odd and even exponents")]
    MixedParity,
    #[error("not a character: multiplicity of rho_{k} would be {value}")]
    NotACharacter { k: u64, value: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unbalanced bracket word at vertex {0}")]
    UnbalancedBrackets(usize),
    #[error("expected a {expected} graph")]
    RootedMismatch { expected: &'static str },
    #[error("graph degrees {graph:?} do not match tensor space degrees {space:?}")]
    DegreeMismatch { graph: Vec<u32>, space: Vec<u32> },
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: u32, max: u32 },
    #[error("tensor spaces differ: {0:?} vs {1:?}")]
    SpaceMismatch(Vec<u32>, Vec<u32>),
    #[error("basis index {0:?} is not valid for degrees {1:?}")]
    InvalidIndex(Vec<u32>, Vec<u32>),
    #[error("the zero tensor has no leading entry")]
    ZeroTensor,
    #[error("matrix [[a, b], [c, d]] has determinant {0}, expected 1")]
    NotUnimodular(String),
    #[error("space of dimension {dim} exceeds the limit of {limit}")]
    SizeGuard { dim: u128, limit: u128 },
    #[error("tensor does not lie in the span of the basis")]
    NotInSpan,
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
