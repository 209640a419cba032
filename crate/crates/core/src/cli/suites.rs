//! Named verification suites, each checking one family of results over a
//! range of board sizes.

use std::io::Write;

use crate::analyze::{max_nondefining_number_with, min_clue_number_with, verify_no_k_defines, MaxNondefMode};
use crate::construct::{circular_path, max_nondefining_clues, minimal_clues, two_solutions_single_clue, zigzag_solution, Corner, ZigZagSpec};
use crate::enumerate::{count_hamiltonian_circuits, solve, SearchControl};
use crate::grid::{BoardDims, Cell};
use crate::model::{clue_screen, matches, ClueSet};

use super::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Circuits exist exactly when the board has two rows and an even side.
    #[value(name = "lemma2")]
    CircuitParity,
    /// Single-row boards: minimum and non-defining maximum.
    #[value(name = "thm-1xn")]
    SingleRow,
    /// Two-row boards: minimum 2, non-defining maximum 2n-2.
    #[value(name = "thm-2xn")]
    TwoRows,
    /// The constructed mn-2 clue set has exactly two solutions.
    #[value(name = "thm-max")]
    MaxClues,
    /// The ceil(m/2) block clues define the top-right zig-zag.
    #[value(name = "thm-upper")]
    BlockBound,
    /// Three-row boards: no single clue defines, two clues suffice.
    #[value(name = "thm-3xn")]
    ThreeRows,
    /// Four-row boards: two clues suffice.
    #[value(name = "cor-4xn")]
    FourRows,
    /// 5×5: no two clues define, three do.
    #[value(name = "conj-5x5")]
    Square5,
    /// 6×6: no two clues define, three do (long).
    #[value(name = "conj-6x6")]
    Square6,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::CircuitParity => "lemma2",
            Suite::SingleRow => "thm-1xn",
            Suite::TwoRows => "thm-2xn",
            Suite::MaxClues => "thm-max",
            Suite::BlockBound => "thm-upper",
            Suite::ThreeRows => "thm-3xn",
            Suite::FourRows => "cor-4xn",
            Suite::Square5 => "conj-5x5",
            Suite::Square6 => "conj-6x6",
        }
    }

    /// Largest board dimension checked when `--max` is not given.
    pub fn default_max(self) -> usize {
        match self {
            Suite::CircuitParity | Suite::TwoRows | Suite::MaxClues | Suite::FourRows => 6,
            Suite::SingleRow => 9,
            Suite::BlockBound => 8,
            Suite::ThreeRows => 7,
            Suite::Square5 => 5,
            Suite::Square6 => 6,
        }
    }

    pub fn is_long(self) -> bool {
        matches!(self, Suite::Square6)
    }
}

struct Checker<'a> {
    out: &'a mut dyn Write,
    passed: usize,
    failed: usize,
}

impl Checker<'_> {
    fn check(&mut self, ok: bool, what: impl AsRef<str>) -> Result<(), CliError> {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        writeln!(self.out, "{} {}", if ok { "ok  " } else { "FAIL" }, what.as_ref())?;
        Ok(())
    }
}

fn dims(m: usize, n: usize) -> Result<BoardDims, CliError> {
    Ok(BoardDims::new(m, n)?)
}

/// Runs `suite` up to size `max`, writing one line per check and a summary
/// line. Returns whether every check passed.
pub fn run_suite(suite: Suite, max: usize, control: &SearchControl, out: &mut dyn Write) -> Result<bool, CliError> {
    let mut ck = Checker { out, passed: 0, failed: 0 };
    match suite {
        Suite::CircuitParity => circuit_parity(&mut ck, max)?,
        Suite::SingleRow => single_row(&mut ck, max, control)?,
        Suite::TwoRows => two_rows(&mut ck, max, control)?,
        Suite::MaxClues => max_clues(&mut ck, max, control)?,
        Suite::BlockBound => block_bound(&mut ck, max)?,
        Suite::ThreeRows => three_rows(&mut ck, max, control)?,
        Suite::FourRows => {
            for n in 4..=max {
                min_clues_equal(&mut ck, dims(4, n)?, 2, control)?;
            }
        }
        Suite::Square5 => square(&mut ck, 5, control)?,
        Suite::Square6 => square(&mut ck, 6, control)?,
    }
    let (passed, failed) = (ck.passed, ck.failed);
    if failed == 0 {
        writeln!(ck.out, "{}: PASS ({passed} checks)", suite.name())?;
    } else {
        writeln!(ck.out, "{}: FAIL ({failed} of {} checks failed)", suite.name(), passed + failed)?;
    }
    Ok(failed == 0)
}

fn circuit_parity(ck: &mut Checker, max: usize) -> Result<(), CliError> {
    for m in 1..=max {
        for n in m..=max {
            let d = dims(m, n)?;
            let count = count_hamiltonian_circuits(d);
            let expected = m >= 2 && (m % 2 == 0 || n % 2 == 0);
            let built = circular_path(d).is_ok();
            ck.check(
                (count > 0) == expected && built == expected,
                format!("{d}: {count} circuits, {} expected", if expected { "some" } else { "none" }),
            )?;
        }
    }
    Ok(())
}

fn min_clues_equal(ck: &mut Checker, d: BoardDims, expected: usize, control: &SearchControl) -> Result<(), CliError> {
    let report = min_clue_number_with(d, expected, control)?;
    let shown = report.k_min.map_or_else(|| format!(">{expected}"), |k| k.to_string());
    ck.check(report.k_min == Some(expected), format!("{d}: minimum clues {shown}, expected {expected}"))
}

fn max_nondef_equal(ck: &mut Checker, d: BoardDims, mode: MaxNondefMode, expected: usize, control: &SearchControl) -> Result<(), CliError> {
    let report = max_nondefining_number_with(d, mode, control)?;
    let mode = if report.exhaustive { "exhaustive" } else { "witness" };
    let ok = report.value == expected && (report.witness.is_none() || report.witness_count >= 2) && (report.exhaustive || report.witness_count == 2);
    ck.check(
        ok,
        format!("{d}: largest non-defining set {} ({mode}, {} solutions), expected {expected}", report.value, report.witness_count),
    )
}

fn single_row(ck: &mut Checker, max: usize, control: &SearchControl) -> Result<(), CliError> {
    for n in 1..=max {
        let d = dims(1, n)?;
        min_clues_equal(ck, d, if n == 1 { 0 } else { 1 }, control)?;
        if n == 1 {
            let report = max_nondefining_number_with(d, MaxNondefMode::Exhaustive, control)?;
            ck.check(report.witness.is_none(), format!("{d}: every clue set defines"))?;
        } else {
            max_nondef_equal(ck, d, MaxNondefMode::Exhaustive, n % 2, control)?;
        }
    }
    Ok(())
}

fn two_rows(ck: &mut Checker, max: usize, control: &SearchControl) -> Result<(), CliError> {
    for n in 2..=max {
        let d = dims(2, n)?;
        min_clues_equal(ck, d, 2, control)?;
        let mode = if n <= 5 { MaxNondefMode::Exhaustive } else { MaxNondefMode::Witness };
        max_nondef_equal(ck, d, mode, 2 * n - 2, control)?;
    }
    Ok(())
}

fn max_clues(ck: &mut Checker, max: usize, control: &SearchControl) -> Result<(), CliError> {
    for m in 3..=max {
        for n in m..=max {
            let d = dims(m, n)?;
            let clues = max_nondefining_clues(d)?;
            let count = solve(&clues, None, 0).count;
            ck.check(clues.len() == m * n - 2 && count == 2, format!("{d}: {} clues, {count} solutions", clues.len()))?;
            if m * n <= crate::analyze::EXHAUSTIVE_NONDEF_CELL_LIMIT {
                max_nondef_equal(ck, d, MaxNondefMode::Exhaustive, m * n - 2, control)?;
            }
        }
    }
    Ok(())
}

fn block_bound(ck: &mut Checker, max: usize) -> Result<(), CliError> {
    for m in 3..=max {
        for n in m..=max {
            let d = dims(m, n)?;
            let clues = minimal_clues(d);
            let out = solve(&clues, Some(2), 1);
            let zigzag = zigzag_solution(d, ZigZagSpec::new(Corner::TopRight));
            let ok = clues.len() == m.div_ceil(2) && out.is_unique() && out.solutions.first() == Some(&zigzag);
            ck.check(ok, format!("{d}: {} clues define the top-right zig-zag", clues.len()))?;
        }
    }
    Ok(())
}

fn three_rows(ck: &mut Checker, max: usize, control: &SearchControl) -> Result<(), CliError> {
    for n in 3..=max {
        let d = dims(3, n)?;
        if n % 2 == 1 {
            let mut tried = 0;
            let mut good = 0;
            for cell in d.iter_cells() {
                for v in 1..=d.cells() {
                    let clues = ClueSet::from_pairs(d, [(cell, v)])?;
                    if !clue_screen(&clues) {
                        continue;
                    }
                    tried += 1;
                    let (a, b) = two_solutions_single_clue(n, cell, v)?;
                    let distinct = a != b && matches(&a, &clues)? && matches(&b, &clues)?;
                    if distinct && solve(&clues, Some(2), 0).count == 2 {
                        good += 1;
                    }
                }
            }
            ck.check(tried == good, format!("{d}: {good} of {tried} single clues have two constructed solutions"))?;
        } else {
            ck.check(verify_no_k_defines(d, 1)?, format!("{d}: no single clue defines"))?;
        }
        min_clues_equal(ck, d, 2, control)?;
    }
    Ok(())
}

fn square(ck: &mut Checker, side: usize, control: &SearchControl) -> Result<(), CliError> {
    let d = dims(side, side)?;
    let report = min_clue_number_with(d, 3, control)?;
    ck.check(report.insufficient.contains(&2), format!("{d}: no two clues define"))?;
    let witness_ok = report.witness.as_ref().is_some_and(|w| w.len() == 3 && solve(w, Some(2), 0).is_unique());
    ck.check(report.k_min == Some(3) && witness_ok, format!("{d}: three clues define"))?;
    if let Some(w) = &report.witness {
        let cells: Vec<String> = w.iter().map(|(c, v)| format!("{c}={v}")).collect();
        writeln!(ck.out, "     witness {}", cells.join(" "))?;
    }
    Ok(())
}

/// Cells to sample with value 1 for a `k = 3` search when none are given:
/// the centre and its upper-left diagonal neighbour (which stands for all
/// four diagonal neighbours on a symmetric board).
pub fn default_sample_cells(d: BoardDims) -> Vec<Cell> {
    let centre = Cell::new(d.rows() / 2, d.cols() / 2);
    let mut cells = vec![centre];
    if centre.row > 0 && centre.col > 0 {
        cells.push(Cell::new(centre.row - 1, centre.col - 1));
    }
    cells
}
