use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated within one cycle")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("set is not contained in the group")]
    NotSubset,
    #[error("element is not a member of the group")]
    NotMember,
    #[error("{classes} conjugacy classes exceed the subset-scan bound {bound}")]
    ClassBound { classes: usize, bound: usize },
    #[error("group of order {order} exceeds the table bound {bound}")]
    TableBound { order: usize, bound: usize },
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension {dim} exceeds the bound {bound}")]
    DimensionBound { dim: usize, bound: usize },
    #[error("the given generators do not generate the group")]
    NotGenerating,
    #[error("terms do not pairwise commute")]
    NonCommuting,
    #[error("units do not span the algebra (span dimension {span} < {dim})")]
    UnitsDoNotSpan { span: usize, dim: usize },
    #[error("invalid structure constants: {0}")]
    InvalidTable(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
