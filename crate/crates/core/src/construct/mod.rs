//! Deterministic constructions of special solutions, circuits and clue sets.

mod three_by_n;

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{BoardDims, Cell, Symmetry};
use crate::model::{ClueSet, Solution, Value};

pub use three_by_n::{position_j, two_solutions_single_clue};

/// Board corner where a zig-zag starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::TopLeft, Corner::TopRight, Corner::BottomLeft, Corner::BottomRight];

    fn is_top(self) -> bool {
        matches!(self, Corner::TopLeft | Corner::TopRight)
    }

    fn is_left(self) -> bool {
        matches!(self, Corner::TopLeft | Corner::BottomLeft)
    }
}

/// A horizontal zig-zag: rows are swept back and forth starting from a
/// corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZigZagSpec {
    pub start: Corner,
}

impl ZigZagSpec {
    pub const fn new(start: Corner) -> Self {
        ZigZagSpec { start }
    }
}

/// A Hamiltonian circuit given as its cyclic sequence of cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicPath {
    dims: BoardDims,
    cells: Vec<Cell>,
}

impl CyclicPath {
    pub fn new(dims: BoardDims, cells: Vec<Cell>) -> Result<Self> {
        if cells.len() != dims.cells() {
            return Err(Error::LengthMismatch { expected: dims.cells(), found: cells.len() });
        }
        let mut seen = vec![false; dims.cells()];
        for &c in &cells {
            dims.check(c)?;
            if std::mem::replace(&mut seen[dims.index(c)], true) {
                return Err(Error::DuplicateCell { cell: c });
            }
        }
        let closed = cells.len() >= 4
            && cells.iter().zip(cells.iter().cycle().skip(1)).all(|(a, b)| a.manhattan(*b) == 1);
        if !closed {
            return Err(Error::NoCircuit { dims });
        }
        Ok(CyclicPath { dims, cells })
    }

    pub fn dims(&self) -> BoardDims {
        self.dims
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Rotated to start at (0,0) and oriented toward the lower-indexed of
    /// its two neighbors on the circuit.
    pub fn canonical(&self) -> CyclicPath {
        let len = self.cells.len();
        let start = self.cells.iter().position(|&c| c == Cell::new(0, 0)).expect("circuit covers (0,0)");
        let mut cells: Vec<Cell> = (0..len).map(|k| self.cells[(start + k) % len]).collect();
        if self.dims.index(cells[1]) > self.dims.index(cells[len - 1]) {
            cells[1..].reverse();
        }
        CyclicPath { dims: self.dims, cells }
    }

    /// The solution numbering the circuit from its first cell.
    pub fn to_solution(&self) -> Solution {
        Solution::from_path(self.dims, &self.cells).expect("circuit is a Hamiltonian path")
    }
}

impl fmt::Display for CyclicPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_solution().fmt(f)
    }
}

/// The horizontal zig-zag solution starting at `spec.start`.
pub fn zigzag_solution(dims: BoardDims, spec: ZigZagSpec) -> Solution {
    let (m, n) = (dims.rows(), dims.cols());
    let mut values = vec![0 as Value; m * n];
    let mut v: Value = 1;
    for k in 0..m {
        let r = if spec.start.is_top() { k } else { m - 1 - k };
        let rightward = (k % 2 == 0) == spec.start.is_left();
        for j in 0..n {
            let c = if rightward { j } else { n - 1 - j };
            values[r * n + c] = v;
            v += 1;
        }
    }
    Solution::from_values_unchecked(dims, values)
}

/// The first-column entries of the zig-zag solution; they define a puzzle.
pub fn zigzag_clues(dims: BoardDims, spec: ZigZagSpec) -> ClueSet {
    let sol = zigzag_solution(dims, spec);
    sol.clues_at((0..dims.rows()).map(|r| Cell::new(r, 0)))
}

/// A Hamiltonian circuit built by walking the outer edge clockwise from the
/// top-left corner and zig-zagging back through the remaining rows.
pub fn circular_path(dims: BoardDims) -> Result<CyclicPath> {
    if dims.rows() < 2 || dims.cols() < 2 || (dims.rows() % 2 == 1 && dims.cols() % 2 == 1) {
        return Err(Error::NoCircuit { dims });
    }
    let transposed = dims.rows() % 2 == 1;
    let work = if transposed { dims.transposed() } else { dims };
    let (m, n) = (work.rows(), work.cols());
    let mut cells = Vec::with_capacity(m * n);
    cells.extend((0..n).map(|c| Cell::new(0, c)));
    cells.extend((1..m).map(|r| Cell::new(r, n - 1)));
    cells.extend((0..n - 1).rev().map(|c| Cell::new(m - 1, c)));
    // interior: rows m-2 up to 1, columns 0..n-1
    for (k, r) in (1..m - 1).rev().enumerate() {
        if k % 2 == 0 {
            cells.extend((0..n - 1).map(|c| Cell::new(r, c)));
        } else {
            cells.extend((0..n - 1).rev().map(|c| Cell::new(r, c)));
        }
    }
    if transposed {
        for c in &mut cells {
            *c = Cell::new(c.col, c.row);
        }
    }
    Ok(CyclicPath::new(dims, cells)?.canonical())
}

fn transpose_clues(clues: &ClueSet) -> ClueSet {
    let dims = clues.dims().transposed();
    ClueSet::from_pairs(dims, clues.iter().map(|(c, v)| (Cell::new(c.col, c.row), v as usize)))
        .expect("transposed clues stay well formed")
}

/// A largest clue set that still leaves two solutions.
///
/// Single-row boards of odd length get the middle clue; boards with at
/// least two rows get `mn - 2` clues with the blanks on a diagonal of the
/// top-left 2×2 block.
pub fn max_nondefining_clues(dims: BoardDims) -> Result<ClueSet> {
    if dims.rows() > dims.cols() {
        return max_nondefining_clues(dims.transposed()).map(|c| transpose_clues(&c));
    }
    let (m, n) = (dims.rows(), dims.cols());
    if m == 1 {
        if n % 2 == 0 || n == 1 {
            return Err(Error::NoSuchSet { dims });
        }
        return ClueSet::from_pairs(dims, [(Cell::new(0, (n - 1) / 2), n.div_ceil(2))]);
    }
    let mut grid = vec![0usize; m * n];
    let at = |r: usize, c: usize| r * n + c;
    // top two rows: 1,4 over 2,3 then a vertical zig-zag
    grid[at(0, 0)] = 1;
    grid[at(1, 0)] = 2;
    grid[at(1, 1)] = 3;
    grid[at(0, 1)] = 4;
    for j in 2..n {
        let (first, second) = if j % 2 == 0 { (0, 1) } else { (1, 0) };
        grid[at(first, j)] = 2 * j + 1;
        grid[at(second, j)] = 2 * j + 2;
    }
    if m >= 3 {
        if grid[at(0, n - 1)] == 2 * n {
            for c in 0..n {
                grid.swap(at(0, c), at(1, c));
            }
        }
        let mut v = 2 * n + 1;
        for (k, r) in (2..m).enumerate() {
            for j in 0..n {
                let c = if k % 2 == 0 { n - 1 - j } else { j };
                grid[at(r, c)] = v;
                v += 1;
            }
        }
    }
    let values: Vec<Value> = grid.iter().map(|&v| v as Value).collect();
    let sol = Solution::new(dims, values).expect("construction yields a solution");
    let blanks = [sol.path()[0], sol.path()[2]];
    Ok(sol.clues_at(dims.iter_cells().filter(|c| !blanks.contains(c))))
}

/// A small defining clue set: `ceil(m/2)` clues in the first column for
/// `m >= 3`, forcing the top-right zig-zag.
pub fn minimal_clues(dims: BoardDims) -> ClueSet {
    if dims.rows() > dims.cols() {
        return transpose_clues(&minimal_clues(dims.transposed()));
    }
    let (m, n) = (dims.rows(), dims.cols());
    let mut pairs: Vec<(Cell, usize)> = Vec::new();
    match m {
        1 if n == 1 => {}
        1 => pairs.push((Cell::new(0, 0), 1)),
        2 => pairs.extend([(Cell::new(0, 0), 1), (Cell::new(1, 0), 2 * n)]),
        3 => pairs.extend([(Cell::new(1, 0), n + 1), (Cell::new(2, 0), 3 * n)]),
        _ => {
            let (q, r) = (m / 4, m % 4);
            let shift = |i: usize| 4 * n * (i - 1);
            for i in 1..=q {
                let top = 4 * (i - 1);
                pairs.push((Cell::new(top + 1, 0), shift(i) + n + 1));
                pairs.push((Cell::new(top + 2, 0), shift(i) + 3 * n));
            }
            match r {
                1 | 2 => pairs.push((Cell::new(4 * q, 0), shift(q) + 5 * n)),
                3 => {
                    pairs.push((Cell::new(m - 2, 0), shift(q + 1) + n + 1));
                    pairs.push((Cell::new(m - 1, 0), shift(q + 1) + 3 * n));
                }
                _ => {}
            }
        }
    }
    ClueSet::from_pairs(dims, pairs).expect("block clues are well formed")
}

/// Moves every value of `s` along the cell map of `sym`.
pub fn apply_symmetry(s: &Solution, sym: Symmetry) -> Result<Solution> {
    let dims = s.dims();
    if sym.needs_square() && !dims.is_square() {
        return Err(Error::NonSquareSymmetry { symmetry: symmetry_name(sym), dims });
    }
    let mut values = vec![0; dims.cells()];
    for cell in dims.iter_cells() {
        values[dims.index(sym.map(dims, cell))] = s.value_at(cell);
    }
    Ok(Solution::from_values_unchecked(dims, values))
}

fn symmetry_name(sym: Symmetry) -> &'static str {
    match sym {
        Symmetry::Identity => "identity",
        Symmetry::FlipHorizontal => "horizontal flip",
        Symmetry::FlipVertical => "vertical flip",
        Symmetry::Rotate180 => "half turn",
        Symmetry::Transpose => "transpose",
        Symmetry::AntiTranspose => "anti-transpose",
        Symmetry::Rotate90 => "quarter turn",
        Symmetry::Rotate270 => "three-quarter turn",
    }
}
