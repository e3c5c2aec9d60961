use thiserror::Error;

/// Errors raised by the windmill library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("invalid windmill parameters m={m}, n={n}: {reason}")]
    InvalidParams {
        m: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("cycle index {k} out of range 1..={m}")]
    CycleOutOfRange { k: usize, m: usize },

    #[error("vertex {label} is not a label of a graph with {vertex_count} vertices")]
    InvalidVertex { label: usize, vertex_count: usize },

    #[error("walk enumeration cap must be at least 1")]
    ZeroCap,

    #[error(
        "the closed form needs m >= 2 (got m={m}); m = 1 is the invertible case, use the general method (M^-1 = M^T)"
    )]
    ClosedFormNeedsMultipleCycles { m: usize },

    #[error("drazin index mismatch: rank stabilisation gives {by_rank}, minimal polynomial gives {by_polynomial}")]
    IndexMismatch {
        by_rank: usize,
        by_polynomial: usize,
    },

    #[error("entry ({row}, {col}) = {value} is not an integer; CSV output is integer-only")]
    NonIntegerEntry {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("malformed matrix: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
