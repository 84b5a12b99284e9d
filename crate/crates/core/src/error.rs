use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },

    #[error("index out of range: {what} = {index}, allowed 0..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("{what} = {value} is below the minimum {min}")]
    TooSmall {
        what: &'static str,
        value: usize,
        min: usize,
    },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("null split quaternion has no inverse")]
    NullQuaternion,

    #[error("quaternion kinds differ")]
    KindMismatch,

    #[error("expected a pure quaternion, found {0}")]
    NotPure(String),

    #[error("zero vector: v- vanishes identically at k = n/2")]
    ZeroEigenvector,

    #[error("subspace is not spanned by standard basis vectors")]
    NotAxisSpanned,

    #[error("ambient dimension must be positive")]
    EmptyAmbient,

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("malformed matrix document: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.into(),
        }
    }
}
