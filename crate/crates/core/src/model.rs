//! Solutions, clue sets and the cheap checks that relate them.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{cell_color, BoardDims, Cell, Color};

/// A board entry. Boards are capped at 128 cells so every value fits.
pub type Value = u8;

/// A completely filled board: values `1..=mn`, consecutive values side-to-side
/// adjacent. Stored as one value per cell in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    dims: BoardDims,
    values: Vec<Value>,
}

impl Solution {
    /// Validates `values` and wraps them.
    pub fn new(dims: BoardDims, values: Vec<Value>) -> Result<Self> {
        if !is_valid_solution(dims, &values)? {
            return Err(Error::Infeasible { reason: "values do not form a solution".into() });
        }
        Ok(Solution { dims, values })
    }

    pub(crate) fn from_values_unchecked(dims: BoardDims, values: Vec<Value>) -> Self {
        debug_assert!(is_valid_solution(dims, &values).unwrap_or(false));
        Solution { dims, values }
    }

    /// Builds a solution from the cell sequence of a Hamiltonian path; the
    /// first cell gets value 1.
    pub fn from_path(dims: BoardDims, path: &[Cell]) -> Result<Self> {
        if path.len() != dims.cells() {
            return Err(Error::LengthMismatch { expected: dims.cells(), found: path.len() });
        }
        let mut values = vec![0; dims.cells()];
        for (k, &cell) in path.iter().enumerate() {
            dims.check(cell)?;
            values[dims.index(cell)] = (k + 1) as Value;
        }
        Solution::new(dims, values)
    }

    pub fn dims(&self) -> BoardDims {
        self.dims
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Value> {
        self.values
    }

    pub fn value_at(&self, cell: Cell) -> Value {
        self.values[self.dims.index(cell)]
    }

    /// Cells in value order: `path()[k]` holds value `k + 1`.
    pub fn path(&self) -> Vec<Cell> {
        let mut path = vec![Cell::new(0, 0); self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            path[v as usize - 1] = self.dims.cell(i);
        }
        path
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Value]> {
        self.values.chunks(self.dims.cols())
    }

    /// The clue set consisting of this solution's entries at `cells`.
    pub fn clues_at(&self, cells: impl IntoIterator<Item = Cell>) -> ClueSet {
        let mut clues = ClueSet::new(self.dims);
        for cell in cells {
            clues.assignments.insert(cell, self.value_at(cell));
        }
        clues
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.dims, &self.values)
    }
}

pub(crate) fn write_grid(f: &mut impl fmt::Write, dims: BoardDims, values: &[Value]) -> fmt::Result {
    writeln!(f, "{} {}", dims.rows(), dims.cols())?;
    for row in values.chunks(dims.cols()) {
        let mut first = true;
        for v in row {
            if !first {
                f.write_char(' ')?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        f.write_char('\n')?;
    }
    Ok(())
}

/// A partial assignment of values to cells.
///
/// Construction enforces well-formedness: cells in bounds, values in
/// `1..=mn`, no cell or value repeated. Feasibility is not checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClueSet {
    dims: BoardDims,
    assignments: BTreeMap<Cell, Value>,
}

impl ClueSet {
    pub fn new(dims: BoardDims) -> Self {
        ClueSet { dims, assignments: BTreeMap::new() }
    }

    pub fn from_pairs(dims: BoardDims, pairs: impl IntoIterator<Item = (Cell, usize)>) -> Result<Self> {
        let mut clues = ClueSet::new(dims);
        for (cell, value) in pairs {
            clues.insert(cell, value)?;
        }
        Ok(clues)
    }

    pub fn insert(&mut self, cell: Cell, value: usize) -> Result<()> {
        self.dims.check(cell)?;
        let max = self.dims.cells();
        if value == 0 || value > max {
            return Err(Error::ValueOutOfRange { cell, value, max });
        }
        if self.assignments.contains_key(&cell) {
            return Err(Error::DuplicateCell { cell });
        }
        if self.assignments.values().any(|&v| v as usize == value) {
            return Err(Error::DuplicateValue { value });
        }
        self.assignments.insert(cell, value as Value);
        Ok(())
    }

    pub fn remove(&mut self, cell: Cell) -> Option<Value> {
        self.assignments.remove(&cell)
    }

    pub fn dims(&self) -> BoardDims {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<Value> {
        self.assignments.get(&cell).copied()
    }

    pub fn cell_of(&self, value: Value) -> Option<Cell> {
        self.assignments.iter().find(|(_, &v)| v == value).map(|(&c, _)| c)
    }

    /// Clues in row-major cell order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, Value)> + '_ {
        self.assignments.iter().map(|(&c, &v)| (c, v))
    }

    /// Row-major grid with 0 for blank cells.
    pub fn to_grid(&self) -> Vec<Value> {
        let mut grid = vec![0; self.dims.cells()];
        for (cell, v) in self.iter() {
            grid[self.dims.index(cell)] = v;
        }
        grid
    }
}

impl fmt::Display for ClueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.dims, &self.to_grid())
    }
}

/// Result of a clue-constrained search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    /// Number of matching solutions found. When `capped` is set the true
    /// count is at least this.
    pub count: u64,
    pub capped: bool,
    /// Lexicographically smallest retained solutions, ascending.
    pub solutions: Vec<Solution>,
}

impl SolveOutcome {
    pub fn is_unique(&self) -> bool {
        self.count == 1 && !self.capped
    }
}

/// True iff `values` is a bijection onto `1..=mn` with consecutive values
/// side-to-side adjacent.
pub fn is_valid_solution(dims: BoardDims, values: &[Value]) -> Result<bool> {
    let n = dims.cells();
    if values.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: values.len() });
    }
    let mut pos = vec![usize::MAX; n + 1];
    for (i, &v) in values.iter().enumerate() {
        let v = v as usize;
        if v == 0 || v > n || pos[v] != usize::MAX {
            return Ok(false);
        }
        pos[v] = i;
    }
    Ok((1..n).all(|v| dims.cell(pos[v]).manhattan(dims.cell(pos[v + 1])) == 1))
}

/// Replaces every value `v` with `mn + 1 - v`.
pub fn reverse_solution(s: &Solution) -> Solution {
    let top = s.dims.cells() + 1;
    Solution { dims: s.dims, values: s.values.iter().map(|&v| (top - v as usize) as Value).collect() }
}

/// Clue-set counterpart of [`reverse_solution`].
pub fn reverse_clues(c: &ClueSet) -> ClueSet {
    let top = c.dims.cells() + 1;
    ClueSet { dims: c.dims, assignments: c.assignments.iter().map(|(&k, &v)| (k, (top - v as usize) as Value)).collect() }
}

/// True iff every clue cell of `c` carries its clue value in `s`.
pub fn matches(s: &Solution, c: &ClueSet) -> Result<bool> {
    if s.dims != c.dims {
        return Err(Error::DimsMismatch { left: s.dims, right: c.dims });
    }
    Ok(c.iter().all(|(cell, v)| s.value_at(cell) == v))
}

/// Necessary conditions for a clue set to have a solution.
///
/// Every pair of clues must be reachable: the value gap is at least the
/// Manhattan distance and has the same parity. On boards with both
/// dimensions odd, odd values must sit on white cells. Passing does not
/// imply a solution exists.
pub fn clue_screen(c: &ClueSet) -> bool {
    let both_odd = c.dims.rows() % 2 == 1 && c.dims.cols() % 2 == 1;
    let clues: Vec<(Cell, Value)> = c.iter().collect();
    for (i, &(ca, va)) in clues.iter().enumerate() {
        if both_odd && ((va % 2 == 1) != (cell_color(ca) == Color::White)) {
            return false;
        }
        for &(cb, vb) in &clues[i + 1..] {
            let gap = va.abs_diff(vb) as usize;
            let dist = ca.manhattan(cb);
            if gap < dist || !(gap - dist).is_multiple_of(2) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(r: usize, c: usize) -> BoardDims {
        BoardDims::new(r, c).unwrap()
    }

    const SAMPLE: [Value; 12] = [4, 3, 2, 1, 5, 6, 7, 8, 12, 11, 10, 9];

    #[test]
    fn validity_examples() {
        assert!(is_valid_solution(dims(3, 4), &SAMPLE).unwrap());
        let mut swapped = SAMPLE;
        swapped.swap(5, 6);
        assert!(!is_valid_solution(dims(3, 4), &swapped).unwrap());
        assert!(is_valid_solution(dims(1, 1), &[1]).unwrap());
        assert!(matches!(is_valid_solution(dims(2, 2), &[1, 2, 3]), Err(Error::LengthMismatch { .. })));
        assert!(!is_valid_solution(dims(2, 2), &[1, 2, 2, 3]).unwrap());
        assert!(!is_valid_solution(dims(2, 2), &[1, 2, 3, 5]).unwrap());
    }

    #[test]
    fn reversal_examples() {
        let s = Solution::new(dims(1, 2), vec![1, 2]).unwrap();
        assert_eq!(reverse_solution(&s).values(), &[2, 1]);
        let sample = Solution::new(dims(3, 4), SAMPLE.to_vec()).unwrap();
        let rev = reverse_solution(&sample);
        assert_eq!(rev.values(), &[9, 10, 11, 12, 8, 7, 6, 5, 1, 2, 3, 4]);
        assert_eq!(reverse_solution(&rev), sample);
    }

    #[test]
    fn reverse_clue_examples() {
        let c = ClueSet::from_pairs(dims(3, 3), [(Cell::new(2, 1), 6), (Cell::new(1, 2), 2)]).unwrap();
        let r = reverse_clues(&c);
        assert_eq!(r.get(Cell::new(2, 1)), Some(4));
        assert_eq!(r.get(Cell::new(1, 2)), Some(8));
        assert!(reverse_clues(&ClueSet::new(dims(3, 3))).is_empty());
    }

    #[test]
    fn matches_examples() {
        let sample = Solution::new(dims(3, 4), SAMPLE.to_vec()).unwrap();
        let c = ClueSet::from_pairs(dims(3, 4), [(Cell::new(0, 0), 4)]).unwrap();
        assert!(matches(&sample, &c).unwrap());
        let c = ClueSet::from_pairs(dims(3, 4), [(Cell::new(0, 0), 1)]).unwrap();
        assert!(!matches(&sample, &c).unwrap());
        assert!(matches(&sample, &ClueSet::new(dims(3, 4))).unwrap());
        assert!(matches!(matches(&sample, &ClueSet::new(dims(4, 3))), Err(Error::DimsMismatch { .. })));
    }

    #[test]
    fn screen_examples() {
        let c = ClueSet::from_pairs(dims(3, 3), [(Cell::new(0, 0), 2)]).unwrap();
        assert!(!clue_screen(&c));
        let c = ClueSet::from_pairs(dims(2, 5), [(Cell::new(0, 0), 1), (Cell::new(0, 4), 2)]).unwrap();
        assert!(!clue_screen(&c));
        let c = ClueSet::from_pairs(dims(3, 3), [(Cell::new(2, 1), 6), (Cell::new(1, 2), 2)]).unwrap();
        assert!(clue_screen(&c));
    }

    #[test]
    fn clue_set_rejects_malformed_input() {
        let d = dims(2, 2);
        let mut c = ClueSet::new(d);
        assert!(matches!(c.insert(Cell::new(2, 0), 1), Err(Error::OutOfBounds { .. })));
        assert!(matches!(c.insert(Cell::new(0, 0), 5), Err(Error::ValueOutOfRange { .. })));
        assert!(matches!(c.insert(Cell::new(0, 0), 0), Err(Error::ValueOutOfRange { .. })));
        c.insert(Cell::new(0, 0), 1).unwrap();
        assert!(matches!(c.insert(Cell::new(0, 0), 2), Err(Error::DuplicateCell { .. })));
        assert!(matches!(c.insert(Cell::new(0, 1), 1), Err(Error::DuplicateValue { .. })));
    }

    #[test]
    fn path_roundtrip() {
        let sample = Solution::new(dims(3, 4), SAMPLE.to_vec()).unwrap();
        assert_eq!(Solution::from_path(sample.dims(), &sample.path()).unwrap(), sample);
        assert_eq!(sample.to_string(), "3 4\n4 3 2 1\n5 6 7 8\n12 11 10 9\n");
    }
}
