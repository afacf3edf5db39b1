use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid size for {what}: {value}")]
    InvalidSize { what: &'static str, value: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("permutation {perm:?} maps edge {{{u}, {v}}} to a non-edge")]
    NotAutomorphism { perm: Vec<usize>, u: usize, v: usize },

    #[error("{what} of size {size} exceeds the limit {limit}")]
    TooLarge { what: &'static str, size: u128, limit: u128 },

    #[error("interpolated polynomial is not an integer polynomial")]
    NotIntegerPolynomial,

    #[error("sample points are inconsistent with a polynomial of degree at most {degree_bound}")]
    InconsistentPoints { degree_bound: usize },

    #[error("need at least {needed} sample points with distinct abscissae, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("power series coefficient {index} is not integral")]
    NonIntegralSeries { index: usize },

    #[error("rational function has an invalid denominator: {0}")]
    InvalidDenominator(&'static str),

    #[error("fixed coloring is not proper on edge {{{0}, {1}}}")]
    ImproperColoring(usize, usize),

    #[error("{k} colors is below the {needed} required")]
    TooFewColors { k: i64, needed: i64 },

    #[error("orbit index {index} out of range ({count} orbits)")]
    OrbitIndex { index: usize, count: usize },

    #[error("power iteration did not converge after {iterations} iterations (last estimate {estimate})")]
    NoConvergence { iterations: usize, estimate: f64 },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
