use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("shape dimensions must be positive, got {0}")]
    EmptyShape(String),

    #[error("element index {index} out of range for a poset with {size} elements")]
    UnknownElement { index: usize, size: usize },

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("invalid cover relation: {0}")]
    InvalidCover(String),

    #[error("cover relation contains a cycle")]
    CyclicCovers,

    #[error("redundant cover {lower} < {upper}: implied by a longer chain")]
    RedundantCover { lower: usize, upper: usize },

    #[error("invalid rc-embedding: {0}")]
    InvalidEmbedding(String),

    #[error("operation requires an rc-embedding")]
    MissingEmbedding,

    #[error("operation requires a rectangle poset [a]x[b]")]
    NotRectangle,

    #[error("file index {index} out of range 1..={files}")]
    FileOutOfRange { index: usize, files: usize },

    #[error("set is not {expected}: {detail}")]
    WrongKind { expected: &'static str, detail: String },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("birational arrays must be strictly positive (element {0})")]
    NonPositive(usize),

    #[error("division by zero while toggling")]
    DivisionByZero,

    #[error("array lies outside the {0}")]
    OutsidePolytope(&'static str),

    #[error("orbit did not return to its start within {cap} iterations")]
    OrbitCapExceeded { cap: usize },

    #[error("map is not invertible on this orbit: state {repeat} recurred before the start")]
    NotInvertible { repeat: usize },

    #[error("functional kind {0} cannot be evaluated here: {1}")]
    BadFunctional(&'static str, String),

    #[error("degenerate sample set: {0}")]
    DegenerateSamples(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),

    #[error("Bender-Knuth index {index} out of range 1..={max}")]
    BenderKnuthOutOfRange { index: usize, max: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
