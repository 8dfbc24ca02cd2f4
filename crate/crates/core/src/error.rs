use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(u32),
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("element is not a unit (norm is zero)")]
    NotAUnit,
    #[error("table is not a Latin square: {0}")]
    NotLatin(String),
    #[error("table has no two-sided identity at index 0")]
    NoIdentity,
    #[error("subset is not a subloop")]
    NotASubloop,
    #[error("subloop is not normal")]
    NotNormal,
    #[error("loop is not Moufang")]
    NotMoufang,
    #[error("loop is not associative")]
    NotAssociative,
    #[error("computed center {computed:?} differs from the expected {expected:?}")]
    CenterMismatch {
        computed: Vec<usize>,
        expected: Vec<usize>,
    },
    #[error("unknown corpus name {0:?}")]
    UnknownName(String),
    #[error("element {element} has order {order}, not a power of {p}")]
    NotPLoop {
        element: usize,
        order: usize,
        p: u32,
    },
    #[error("element {0} is not nilpotent of the requested degree")]
    NotNilpotent(&'static str),
    #[error("operands belong to different algebras")]
    Mismatch,
    #[error("loop of order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
