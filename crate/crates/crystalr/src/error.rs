use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("capacity must be at least 1, got {0}")]
    CapacityTooSmall(usize),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("crystal operator index {i} exceeds rank {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("family mismatch between tensor factors")]
    FamilyMismatch,
    #[error("rank mismatch between tensor factors")]
    RankMismatch,
    #[error("word parse error: {0}")]
    WordParse(String),
    #[error("column insertion undefined: {0}")]
    InsertionUndefined(String),
    #[error("cell ({row}, {col}) is not a removable corner")]
    NotACorner { row: usize, col: usize },
    #[error("not a highest element of type I or II: {0}")]
    NotHighest(String),
    #[error("closed-form image requires l >= k, got l = {l}, k = {k}")]
    CapacityOrder { l: usize, k: usize },
    #[error("enumeration size {0} exceeds the configured cap {1}")]
    SizeCap(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("1dsum input error: {0}")]
    OneDSum(String),
    #[error("polynomial parse error: {0}")]
    PolyParse(String),
}
