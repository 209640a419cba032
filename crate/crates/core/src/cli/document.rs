//! The puzzle file format.
//!
//! ```text
//! # comment lines may appear anywhere
//! 3 3
//! 0 0 0
//! 0 0 2
//! 0 6 0
//! ```
//!
//! A header line `m n` is followed by `m` lines of `n` integers; `0` marks a
//! blank cell. Blank lines are ignored.

use crate::error::{Error, Result};
use crate::grid::BoardDims;
use crate::model::{ClueSet, Value};

/// A parsed puzzle file: board size plus a row-major grid of entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuzzleDocument {
    dims: BoardDims,
    grid: Vec<Value>,
    clues: ClueSet,
}

impl PuzzleDocument {
    pub fn from_clues(clues: ClueSet) -> Self {
        PuzzleDocument { dims: clues.dims(), grid: clues.to_grid(), clues }
    }

    pub fn dims(&self) -> BoardDims {
        self.dims
    }

    /// Row-major entries, 0 for blank.
    pub fn grid(&self) -> &[Value] {
        &self.grid
    }

    pub fn clues(&self) -> &ClueSet {
        &self.clues
    }

    pub fn into_clues(self) -> ClueSet {
        self.clues
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number(line: usize, column: usize, token: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| parse_error(line, column, format!("expected a non-negative integer, found {token:?}")))
}

pub fn parse_puzzle(text: &str) -> Result<PuzzleDocument> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, 1, "missing header line \"m n\""))?;
    let header_tokens = tokens(header);
    if header_tokens.len() != 2 {
        let column = header_tokens.get(2).map_or(1, |t| t.0);
        return Err(parse_error(header_line, column, "header must be two integers \"m n\""));
    }
    let rows = number(header_line, header_tokens[0].0, header_tokens[0].1)?;
    let cols = number(header_line, header_tokens[1].0, header_tokens[1].1)?;
    let dims = BoardDims::new(rows, cols).map_err(|e| parse_error(header_line, 1, e.to_string()))?;

    let mut clues = ClueSet::new(dims);
    let mut last_line = header_line;
    for r in 0..rows {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_error(last_line + 1, 1, format!("expected {rows} rows, found {r}")))?;
        last_line = line_no;
        let entries = tokens(line);
        if entries.len() != cols {
            let column = entries.get(cols).map_or(line.trim_end().len() + 1, |t| t.0);
            return Err(parse_error(line_no, column, format!("expected {cols} entries, found {}", entries.len())));
        }
        for (c, &(column, token)) in entries.iter().enumerate() {
            let value = number(line_no, column, token)?;
            if value != 0 {
                clues
                    .insert(crate::grid::Cell::new(r, c), value)
                    .map_err(|e| parse_error(line_no, column, e.to_string()))?;
            }
        }
    }
    if let Some((line_no, line)) = lines.next() {
        let column = line.len() - line.trim_start().len() + 1;
        return Err(parse_error(line_no, column, format!("unexpected content after {rows} rows")));
    }
    Ok(PuzzleDocument::from_clues(clues))
}

/// Canonical rendering: header, then rows of single-space separated
/// entries, each line newline-terminated.
pub fn format_puzzle(doc: &PuzzleDocument) -> String {
    doc.clues.to_string()
}
