//! Board geometry: dimensions, cells, side-to-side adjacency and the
//! checkerboard coloring.

use std::fmt;

use crate::error::{Error, Result};

/// Largest board (in cells) the engine accepts. Values fit in a `u8` and
/// cell sets fit in a `u128` bitmask.
pub const MAX_CELLS: usize = 128;

/// Rectangular board geometry: `rows` × `cols`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoardDims {
    rows: usize,
    cols: usize,
}

impl BoardDims {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDims { rows, cols, reason: "both dimensions must be at least 1" });
        }
        if rows.checked_mul(cols).is_none_or(|c| c > MAX_CELLS) {
            return Err(Error::InvalidDims { rows, cols, reason: "board exceeds 128 cells" });
        }
        Ok(BoardDims { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of cells, `rows * cols`. Also the largest value on the board.
    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    /// The same board with rows and columns exchanged.
    pub fn transposed(&self) -> BoardDims {
        BoardDims { rows: self.cols, cols: self.rows }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row < self.rows && cell.col < self.cols
    }

    pub(crate) fn check(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::OutOfBounds { cell, dims: *self })
        }
    }

    /// Row-major index of `cell`.
    pub fn index(&self, cell: Cell) -> usize {
        cell.row * self.cols + cell.col
    }

    pub fn cell(&self, index: usize) -> Cell {
        Cell { row: index / self.cols, col: index % self.cols }
    }

    /// All cells in row-major order.
    pub fn iter_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.cells()).map(move |i| self.cell(i))
    }

    /// Number of edges in the grid graph.
    pub fn edge_count(&self) -> usize {
        self.rows * (self.cols - 1) + self.cols * (self.rows - 1)
    }
}

impl fmt::Display for BoardDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// A board square, 0-based from the top-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn manhattan(&self, other: Cell) -> usize {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// Checkerboard color; the top-left cell is white.
pub fn cell_color(cell: Cell) -> Color {
    if (cell.row + cell.col).is_multiple_of(2) {
        Color::White
    } else {
        Color::Black
    }
}

/// Side-to-side neighbors in the order up, down, left, right.
pub fn neighbors(dims: BoardDims, cell: Cell) -> Result<Vec<Cell>> {
    dims.check(cell)?;
    let mut out = Vec::with_capacity(4);
    if cell.row > 0 {
        out.push(Cell::new(cell.row - 1, cell.col));
    }
    if cell.row + 1 < dims.rows {
        out.push(Cell::new(cell.row + 1, cell.col));
    }
    if cell.col > 0 {
        out.push(Cell::new(cell.row, cell.col - 1));
    }
    if cell.col + 1 < dims.cols {
        out.push(Cell::new(cell.row, cell.col + 1));
    }
    Ok(out)
}

/// `(white, black)` cell counts.
pub fn color_counts(dims: BoardDims) -> (usize, usize) {
    let cells = dims.cells();
    (cells.div_ceil(2), cells / 2)
}

/// A rigid motion of the board onto itself.
///
/// `FlipHorizontal` mirrors left to right (columns reverse), `FlipVertical`
/// mirrors top to bottom. The transpose family only maps a board onto itself
/// when it is square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    FlipHorizontal,
    FlipVertical,
    Rotate180,
    Transpose,
    AntiTranspose,
    Rotate90,
    Rotate270,
}

impl Symmetry {
    pub const RECTANGLE: [Symmetry; 4] =
        [Symmetry::Identity, Symmetry::FlipHorizontal, Symmetry::FlipVertical, Symmetry::Rotate180];

    pub const SQUARE: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::FlipHorizontal,
        Symmetry::FlipVertical,
        Symmetry::Rotate180,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
        Symmetry::Rotate90,
        Symmetry::Rotate270,
    ];

    /// Every symmetry valid on `dims`.
    pub fn all_for(dims: BoardDims) -> &'static [Symmetry] {
        if dims.is_square() {
            &Self::SQUARE
        } else {
            &Self::RECTANGLE
        }
    }

    pub fn needs_square(self) -> bool {
        matches!(self, Symmetry::Transpose | Symmetry::AntiTranspose | Symmetry::Rotate90 | Symmetry::Rotate270)
    }

    /// Image of `cell`. The caller guarantees the symmetry is valid for `dims`.
    pub fn map(self, dims: BoardDims, cell: Cell) -> Cell {
        let last_row = dims.rows - 1;
        let last_col = dims.cols - 1;
        let Cell { row, col } = cell;
        match self {
            Symmetry::Identity => cell,
            Symmetry::FlipHorizontal => Cell::new(row, last_col - col),
            Symmetry::FlipVertical => Cell::new(last_row - row, col),
            Symmetry::Rotate180 => Cell::new(last_row - row, last_col - col),
            Symmetry::Transpose => Cell::new(col, row),
            Symmetry::AntiTranspose => Cell::new(last_col - col, last_row - row),
            // clockwise
            Symmetry::Rotate90 => Cell::new(col, last_row - row),
            Symmetry::Rotate270 => Cell::new(last_col - col, row),
        }
    }

    pub fn inverse(self) -> Symmetry {
        match self {
            Symmetry::Rotate90 => Symmetry::Rotate270,
            Symmetry::Rotate270 => Symmetry::Rotate90,
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(r: usize, c: usize) -> BoardDims {
        BoardDims::new(r, c).unwrap()
    }

    #[test]
    fn neighbor_examples() {
        assert!(neighbors(dims(1, 1), Cell::new(0, 0)).unwrap().is_empty());
        assert_eq!(neighbors(dims(3, 3), Cell::new(0, 0)).unwrap(), vec![Cell::new(1, 0), Cell::new(0, 1)]);
        assert_eq!(
            neighbors(dims(3, 3), Cell::new(1, 1)).unwrap(),
            vec![Cell::new(0, 1), Cell::new(2, 1), Cell::new(1, 0), Cell::new(1, 2)]
        );
    }

    #[test]
    fn neighbors_out_of_bounds() {
        assert!(matches!(neighbors(dims(2, 2), Cell::new(2, 0)), Err(Error::OutOfBounds { .. })));
    }

    #[test]
    fn colors() {
        assert_eq!(cell_color(Cell::new(0, 0)), Color::White);
        assert_eq!(cell_color(Cell::new(0, 1)), Color::Black);
        assert_eq!(cell_color(Cell::new(2, 4)), Color::White);
        assert_eq!(color_counts(dims(3, 5)), (8, 7));
        assert_eq!(color_counts(dims(2, 2)), (2, 2));
        assert_eq!(color_counts(dims(1, 1)), (1, 0));
    }

    #[test]
    fn bad_dims() {
        assert!(BoardDims::new(0, 3).is_err());
        assert!(BoardDims::new(3, 0).is_err());
        assert!(BoardDims::new(12, 11).is_err());
        assert!(BoardDims::new(8, 16).is_ok());
    }

    #[test]
    fn adjacency_properties() {
        for r in 1..=6 {
            for c in 1..=6 {
                let d = dims(r, c);
                let mut degree_sum = 0;
                for a in d.iter_cells() {
                    let na = neighbors(d, a).unwrap();
                    degree_sum += na.len();
                    for &b in &na {
                        assert_eq!(cell_color(b), cell_color(a).opposite());
                        assert!(neighbors(d, b).unwrap().contains(&a));
                        assert_eq!(a.manhattan(b), 1);
                    }
                }
                assert_eq!(degree_sum, 2 * d.edge_count());
            }
        }
    }

    #[test]
    fn symmetries_are_bijections_with_inverses() {
        for d in [dims(3, 5), dims(4, 4), dims(1, 1)] {
            for &s in Symmetry::all_for(d) {
                let mut seen = vec![false; d.cells()];
                for c in d.iter_cells() {
                    let img = s.map(d, c);
                    assert!(d.contains(img));
                    seen[d.index(img)] = true;
                    assert_eq!(s.inverse().map(d, img), c);
                }
                assert!(seen.iter().all(|&b| b));
            }
        }
    }
}
