use thiserror::Error;

use crate::grid::{BoardDims, Cell};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid board {rows}x{cols}: {reason}")]
    InvalidDims { rows: usize, cols: usize, reason: &'static str },

    #[error("cell {cell} is outside the {dims} board")]
    OutOfBounds { cell: Cell, dims: BoardDims },

    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("board mismatch: {left} vs {right}")]
    DimsMismatch { left: BoardDims, right: BoardDims },

    #[error("clue value {value} at {cell} is outside 1..={max}")]
    ValueOutOfRange { cell: Cell, value: usize, max: usize },

    #[error("value {value} is given twice")]
    DuplicateValue { value: usize },

    #[error("cell {cell} is given twice")]
    DuplicateCell { cell: Cell },

    #[error("the {dims} board has no Hamiltonian circuit")]
    NoCircuit { dims: BoardDims },

    #[error("every nonempty clue set defines a puzzle on the {dims} board")]
    NoSuchSet { dims: BoardDims },

    #[error("clue set admits no solution: {reason}")]
    Infeasible { reason: String },

    #[error("{symmetry} needs a square board, got {dims}")]
    NonSquareSymmetry { symmetry: &'static str, dims: BoardDims },

    #[error("exhaustive search on {dims} exceeds the capacity bound: {detail}")]
    Capacity { dims: BoardDims, detail: String },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("search cancelled")]
    Cancelled,
}
