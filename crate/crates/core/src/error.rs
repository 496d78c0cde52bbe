use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ambient variable mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("evaluation point has {got} coordinates, polynomial has {expected} variables")]
    PointLength { expected: usize, got: usize },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("monomial has {got} exponents, ring has {expected} variables")]
    MonomialLength { expected: usize, got: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix size must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("matrix is not symmetric: a[{i}][{j}] = {a_ij} but a[{j}][{i}] = {a_ji}")]
    Asymmetric { i: usize, j: usize, a_ij: i64, a_ji: i64 },
    #[error("nonzero diagonal entry a[{i}][{i}] = {value}")]
    NonzeroDiagonal { i: usize, value: i64 },
    #[error("negative entry a[{i}][{j}] = {value}")]
    NegativeEntry { i: usize, j: usize, value: i64 },
    #[error("entry a[{i}][{j}] = {value} does not fit in 32 bits")]
    EntryOverflow { i: usize, j: usize, value: i64 },
    #[error("edge ({i}, {j}) invalid for {n} vertices (1-based, i < j required)")]
    BadEdge { i: usize, j: usize, n: usize },
    #[error("shape {parts:?} sums to {sum}, matrix has size {n}")]
    ShapeMismatch { parts: Vec<usize>, sum: usize, n: usize },
    #[error("shape must have positive parts, got {0:?}")]
    BadShape(Vec<usize>),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmError {
    #[error("expansion budget exceeded: {vars} variables (cap {max_vars}), degree {degree} (cap {max_degree})")]
    BudgetExceeded {
        vars: usize,
        max_vars: usize,
        degree: u64,
        max_degree: u64,
    },
    #[error("evaluation point coordinates must be distinct (index {0} and {1} agree)")]
    RepeatedCoordinate(usize, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Thm1Error {
    #[error("shape has a single part; at least two blocks are required")]
    SingleBlock,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{name} = {numerator}/{denominator} is not an integer")]
    NotIntegral {
        name: &'static str,
        numerator: i128,
        denominator: i128,
    },
    #[error("theta = w - wt = {0} must be at least 1")]
    ThetaTooSmall(i64),
    #[error("entries too large for a 32-bit edge matrix")]
    Overflow,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
