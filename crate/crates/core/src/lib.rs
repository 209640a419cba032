//! Numbrix puzzles on rectangular boards: solving, counting, constructing
//! puzzles with known clue counts, and verifying clue-count bounds by
//! exhaustive search.
//!
//! A solution fills an `m×n` board with `1..=mn` so that consecutive values
//! sit on orthogonally adjacent cells, i.e. it is a directed Hamiltonian path
//! of the grid graph. A puzzle is a partial assignment (a [`ClueSet`]); it is
//! *defining* when exactly one solution extends it.
//!
//! ```
//! use numbrix::{defines_puzzle, BoardDims, Cell, ClueSet};
//!
//! let dims = BoardDims::new(3, 3).unwrap();
//! let clues = ClueSet::from_pairs(dims, [(Cell::new(0, 0), 9), (Cell::new(2, 2), 1), (Cell::new(0, 2), 3)]).unwrap();
//! assert!(defines_puzzle(&clues));
//! ```

pub mod analyze;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod model;

pub use analyze::{
    find_defining_extension, find_defining_set, max_nondefining_number, max_nondefining_number_with, min_clue_number, min_clue_number_with,
    verify_no_k_defines,
    MaxNondefMode, MaxNondefReport, MinCluesReport,
};
pub use construct::{
    apply_symmetry, circular_path, max_nondefining_clues, minimal_clues, position_j, two_solutions_single_clue,
    zigzag_clues, zigzag_solution, Corner, CyclicPath, ZigZagSpec,
};
pub use enumerate::{
    all_circuits, all_solutions, count_hamiltonian_circuits, count_hamiltonian_paths, count_hamiltonian_paths_with,
    defines_puzzle, fold_solutions, solve, AllSolutions, SearchControl, Solver,
};
pub use error::{Error, Result};
pub use grid::{cell_color, color_counts, neighbors, BoardDims, Cell, Color, Symmetry, MAX_CELLS};
pub use model::{
    clue_screen, is_valid_solution, matches, reverse_clues, reverse_solution, ClueSet, Solution, SolveOutcome, Value,
};
