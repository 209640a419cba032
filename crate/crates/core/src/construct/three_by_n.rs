//! Two distinct solutions for any single clue on a 3×n board, n odd.
//!
//! Clues on a mirror axis are handled by reflecting one solution. All other
//! clues are moved by symmetry and reversal into the top row, left of the
//! middle, with value at most `(3n+1)/2`, and then realized by paths that
//! pass along the top row through a fixed column `J`:
//!
//! * a clue that would put `x < J` at column `J` starts the path on the top
//!   row, runs right, snakes back through rows 1-2 and leaves a `3×(J-x)`
//!   block that can be finished row-wise or column-wise;
//! * otherwise the path first snakes through rows 1-2 of the leftmost
//!   `(x-J)/2` columns, climbs to the top-left corner, runs right and leaves
//!   a `2×l` strip with two finishes.

use crate::enumerate::solve;
use crate::error::{Error, Result};
use crate::grid::{BoardDims, Cell, Symmetry};
use crate::model::{clue_screen, matches, reverse_solution, ClueSet, Solution};

use super::apply_symmetry;

/// 1-based column `J`: the largest odd number below `(n+1)/2`.
pub fn position_j(n: usize) -> usize {
    let half = n.div_ceil(2);
    if (half - 1) % 2 == 1 {
        half - 1
    } else {
        half - 2
    }
}

/// Two different 3×n solutions that both carry `value` at `cell`.
pub fn two_solutions_single_clue(n: usize, cell: Cell, value: usize) -> Result<(Solution, Solution)> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidDims { rows: 3, cols: n, reason: "single-clue construction needs an odd width of at least 3" });
    }
    let dims = BoardDims::new(3, n)?;
    let clues = ClueSet::from_pairs(dims, [(cell, value)])?;
    if !clue_screen(&clues) {
        return Err(Error::Infeasible { reason: format!("value {value} cannot sit on {cell}: odd values belong on white cells") });
    }
    let mid = (n - 1) / 2;
    let pair = if let Some(axis) = mirror_axis(n, cell) {
        mirrored_pair(&clues, axis)?
    } else {
        debug_assert!(cell.row != 1 && cell.col != mid);
        constructed_pair(dims, cell, value)
    };
    debug_assert!(matches(&pair.0, &clues).unwrap() && matches(&pair.1, &clues).unwrap());
    assert_ne!(pair.0, pair.1);
    Ok(pair)
}

/// A reflection of the board that fixes `cell`, if the construction should
/// use one.
fn mirror_axis(n: usize, cell: Cell) -> Option<Symmetry> {
    let mid = (n - 1) / 2;
    if cell.row == 1 {
        Some(Symmetry::FlipVertical)
    } else if cell.col == mid {
        Some(Symmetry::FlipHorizontal)
    } else if n == 3 {
        // remaining 3×3 cells are corners, each on a diagonal
        Some(if cell.row == cell.col { Symmetry::Transpose } else { Symmetry::AntiTranspose })
    } else {
        None
    }
}

fn mirrored_pair(clues: &ClueSet, axis: Symmetry) -> Result<(Solution, Solution)> {
    let found = solve(clues, Some(1), 1);
    let first = found
        .solutions
        .into_iter()
        .next()
        .ok_or_else(|| Error::Infeasible { reason: "no solution carries this clue".into() })?;
    let second = apply_symmetry(&first, axis)?;
    Ok((first, second))
}

fn constructed_pair(dims: BoardDims, cell: Cell, value: usize) -> (Solution, Solution) {
    let n = dims.cols();
    let mid = (n - 1) / 2;
    let vflip = cell.row == 2;
    let hflip = cell.col > mid;
    let col = if hflip { n - 1 - cell.col } else { cell.col };
    let reversed = value > (3 * n).div_ceil(2);
    let y = if reversed { 3 * n + 1 - value } else { value };

    let j = position_j(n);
    let position = col + 1;
    // every top-row clue up to (3n+1)/2 in positions 1..=J must be reachable
    let largest_needed = if (3 * n).div_ceil(2) % 2 == 1 { (3 * n).div_ceil(2) } else { (3 * n - 1) / 2 };
    assert!(2 * n - 3 >= largest_needed, "position-1 range too small for n = {n}");
    let x = if position <= j {
        y + (j - position)
    } else {
        // the extra position J+1 exists when (n-1)/2 is even; its clue is x+1
        assert_eq!(position, j + 1);
        assert_eq!(mid % 2, 0);
        assert!(y >= 2);
        y - 1
    };
    assert_eq!(x % 2, 1);
    assert!(x <= 2 * n - 4 + j, "x = {x} leaves no room for two finishes");

    let (a, b) = if x < j { early_start(n, j, x) } else { pulled_back(n, j, x) };
    let finish = |path: Vec<Cell>| {
        let mut s = Solution::from_path(dims, &path).expect("construction yields a Hamiltonian path");
        assert_eq!(s.value_at(Cell::new(0, col)) as usize, y);
        if reversed {
            s = reverse_solution(&s);
        }
        if hflip {
            s = apply_symmetry(&s, Symmetry::FlipHorizontal).expect("flip is valid");
        }
        if vflip {
            s = apply_symmetry(&s, Symmetry::FlipVertical).expect("flip is valid");
        }
        s
    };
    (finish(a), finish(b))
}

/// `1` starts on the top row at column `J-x` (0-based) so that `x` lands in
/// column `J-1`.
fn early_start(n: usize, j: usize, x: usize) -> (Vec<Cell>, Vec<Cell>) {
    let start = j - x;
    let mut path: Vec<Cell> = (start..n).map(|c| Cell::new(0, c)).collect();
    for (k, c) in (start..n).rev().enumerate() {
        if k % 2 == 0 {
            path.extend([Cell::new(1, c), Cell::new(2, c)]);
        } else {
            path.extend([Cell::new(2, c), Cell::new(1, c)]);
        }
    }
    assert_eq!(path.last(), Some(&Cell::new(2, start)));
    let width = start;
    assert!(width >= 2 && width.is_multiple_of(2));

    let mut by_rows = path.clone();
    by_rows.extend((0..width).rev().map(|c| Cell::new(2, c)));
    by_rows.extend((0..width).map(|c| Cell::new(1, c)));
    by_rows.extend((0..width).rev().map(|c| Cell::new(0, c)));

    let mut by_cols = path;
    for (k, c) in (0..width).rev().enumerate() {
        if k % 2 == 0 {
            by_cols.extend([Cell::new(2, c), Cell::new(1, c), Cell::new(0, c)]);
        } else {
            by_cols.extend([Cell::new(0, c), Cell::new(1, c), Cell::new(2, c)]);
        }
    }
    (by_rows, by_cols)
}

/// The path snakes through rows 1-2 of the first `(x-J)/2` columns, climbs
/// column 0 to the top row and runs right, leaving a `2×l` strip.
fn pulled_back(n: usize, j: usize, x: usize) -> (Vec<Cell>, Vec<Cell>) {
    let used = (x - j) / 2;
    let strip = n - used;
    assert!(strip >= 2, "strip of width {strip}");
    let mut path = Vec::with_capacity(3 * n);
    for c in (0..used).rev() {
        if c % 2 == 1 {
            path.extend([Cell::new(1, c), Cell::new(2, c)]);
        } else {
            path.extend([Cell::new(2, c), Cell::new(1, c)]);
        }
    }
    path.extend((0..n).map(|c| Cell::new(0, c)));

    let mut by_rows = path.clone();
    by_rows.extend((used..n).rev().map(|c| Cell::new(1, c)));
    by_rows.extend((used..n).map(|c| Cell::new(2, c)));

    let mut by_cols = path;
    for (k, c) in (used..n).rev().enumerate() {
        if k % 2 == 0 {
            by_cols.extend([Cell::new(1, c), Cell::new(2, c)]);
        } else {
            by_cols.extend([Cell::new(2, c), Cell::new(1, c)]);
        }
    }
    (by_rows, by_cols)
}
