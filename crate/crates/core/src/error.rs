use thiserror::Error;

use crate::dispatch::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters (m={m}, n={n}, r={r}, s={s}): {reason}")]
    InvalidParams {
        m: usize,
        n: usize,
        r: usize,
        s: usize,
        reason: &'static str,
    },

    #[error("cell ({row}, {col}) lies outside a {rows}x{cols} array")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("cell ({row}, {col}) is filled twice")]
    DuplicateCell { row: usize, col: usize },

    #[error("array is {found_rows}x{found_cols} but parameters require {rows}x{cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },

    #[error("{op}: operand is not shiftable")]
    NotShiftable { op: &'static str },

    #[error("{op}: operand does not have a uniform number of filled cells per {line}")]
    Irregular {
        op: &'static str,
        line: &'static str,
    },

    #[error("{op}: row counts differ ({left} vs {right})")]
    RowCountMismatch {
        op: &'static str,
        left: usize,
        right: usize,
    },

    #[error("{op}: filled cells per {line} differ ({left} vs {right})")]
    DegreeMismatch {
        op: &'static str,
        line: &'static str,
        left: usize,
        right: usize,
    },

    #[error("{op}: attached block has an odd number of filled cells ({cells})")]
    OddCellCount { op: &'static str, cells: usize },

    #[error("{block} requires an even m >= {min}, got {m}")]
    BlockSize {
        block: &'static str,
        m: usize,
        min: usize,
    },

    #[error("row {row} contains both {value} and {neg}", neg = -value)]
    OpposedPair { row: usize, value: i64 },

    #[error("unknown seed `{0}`")]
    UnknownSeed(String),

    #[error("no SMR({m},{n};{r},2) exists: {verdict}")]
    Infeasible {
        m: usize,
        n: usize,
        r: usize,
        verdict: Verdict,
    },

    #[error("route replay failed: {0}")]
    Replay(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
