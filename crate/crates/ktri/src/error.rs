use crate::polygon::Diagonal;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid one-line notation: {0}")]
    InvalidPermutation(String),

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("parameters must satisfy k >= 1 and 2k+1 <= n, got n={n}, k={k}")]
    InvalidParameters { n: usize, k: usize },

    #[error("({a},{b}) is not a chord: endpoints must be distinct and at least 1")]
    DegenerateChord { a: usize, b: usize },

    #[error("({a},{b}) is not a chord of the {n}-gon")]
    InvalidChord { a: usize, b: usize, n: usize },

    #[error("diagonal {diagonal} is not relevant for n={n}, k={k}")]
    IrrelevantDiagonal {
        diagonal: Diagonal,
        n: usize,
        k: usize,
    },

    #[error("mutually crossing diagonals present: {}", format_diagonals(.witness))]
    CrossingPresent { witness: Vec<Diagonal> },

    #[error("expected {expected} diagonals, got {got}")]
    WrongDiagonalCount { expected: usize, got: usize },

    #[error("box ({row},{col}) is outside the staircase of size {size}")]
    BoxOutOfRange { row: usize, col: usize, size: usize },

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("face is not a face of the complex")]
    FaceNotInComplex,

    #[error("subword complex is void: the word contains no reduced word for the target")]
    VoidComplex,

    #[error("instance exceeds the enumeration guard: {0}")]
    GuardExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn format_diagonals(ds: &[Diagonal]) -> String {
    ds.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
