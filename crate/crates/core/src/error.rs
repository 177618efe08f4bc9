use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the ambient dimension n must be positive")]
    ZeroDimension,
    #[error("partition has {got} parts but n = {n}")]
    TooManyParts { got: usize, n: usize },
    #[error("partition is not weakly decreasing at position {position}: {before} < {after}")]
    NotDecreasing {
        position: usize,
        before: u32,
        after: u32,
    },
    #[error("could not parse partition part {text:?}: {reason}")]
    BadPart { text: String, reason: String },
    #[error("tableau has {got} entries but the diagram has {expected} boxes")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("empty index set")]
    EmptyIndexSet,
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("functional has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("functional ties on the index set {indices:?}")]
    NonGeneric { indices: Vec<usize> },
    #[error("tree is not a B_{k}-forest for this partition")]
    NotBkForest { k: usize },
    #[error("tree has {got} nodes, expected {expected}")]
    TreeSize { expected: usize, got: usize },
    #[error("malformed tree encoding {0:?}")]
    BadTreeEncoding(String),
    #[error("index sets {a:?} and {b:?} intersect but their union is not in the building set")]
    NotBuildingSet { a: Vec<usize>, b: Vec<usize> },
    #[error("constructed filling is not a standard tableau: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
