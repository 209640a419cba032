//! Command-line front end: puzzle files, generators, counts, reports and
//! named verification suites.
//!
//! [`run`] is the whole program; `main` only forwards the process arguments
//! and standard streams. Standard output is deterministic for every
//! subcommand and thread count; progress of long searches goes to standard
//! error.

mod document;
mod suites;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analyze::{find_defining_extension, max_nondefining_number_with, min_clue_number_with, MaxNondefMode};
use crate::construct::{circular_path, max_nondefining_clues, minimal_clues, two_solutions_single_clue, zigzag_clues, zigzag_solution, Corner, ZigZagSpec};
use crate::enumerate::{count_hamiltonian_circuits, count_hamiltonian_paths_with, SearchControl, Solver};
use crate::error::Error;
use crate::grid::{BoardDims, Cell};
use crate::model::ClueSet;

pub use document::{format_puzzle, parse_puzzle, PuzzleDocument};
pub use suites::{run_suite, Suite};

/// Exit status for success or a verified property.
pub const EXIT_OK: i32 = 0;
/// Exit status when a checked property does not hold.
pub const EXIT_VIOLATED: i32 = 1;
/// Exit status for usage, input, capacity and I/O errors.
pub const EXIT_USAGE: i32 = 2;

/// Boards with at least this many cells count as long-running.
const LONG_CELLS: usize = 49;

#[derive(Debug, Parser)]
#[command(name = "numbrix", version, about = "Solve, count and analyze Numbrix puzzles")]
struct Cli {
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "NUMBRIX_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a puzzle file ("-" reads standard input).
    Solve {
        file: PathBuf,
        /// Number of solutions to print, smallest first.
        #[arg(long, default_value_t = 1)]
        retain: usize,
        /// Stop counting after this many solutions.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Print a constructed clue set or solution.
    Gen {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Starting corner of a zig-zag.
        #[arg(long, value_enum, default_value_t = CornerArg::Tr)]
        corner: CornerArg,
        /// Print the zig-zag solution itself rather than its clues.
        #[arg(long)]
        solution: bool,
    },
    /// Count directed Hamiltonian paths (all solutions of the empty board).
    CountPaths {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Count undirected Hamiltonian circuits instead.
        #[arg(long)]
        circuits: bool,
        /// Permit boards of 49 cells or more.
        #[arg(long)]
        allow_long: bool,
    },
    /// Smallest defining clue count up to a bound.
    MinClues {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        kmax: usize,
    },
    /// Largest clue count that still leaves two solutions.
    MaxNondef {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest board dimension to check.
        #[arg(long)]
        max: Option<usize>,
        /// Permit long-running suites.
        #[arg(long)]
        allow_long: bool,
    },
    /// Two different 3×n solutions sharing one clue.
    TwoSolutions {
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
        #[arg(long)]
        value: usize,
    },
    /// Search for defining three-clue sets that place 1 on given cells.
    ///
    /// Each placement is independent and reported on its own line, so an
    /// interrupted run resumes by passing the remaining cells.
    SampleK3 {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Cell "ROW,COL" for value 1; repeatable. Defaults to the centre
        /// and its diagonal neighbour.
        #[arg(long = "one-at", value_parser = parse_cell)]
        one_at: Vec<Cell>,
        #[arg(long)]
        allow_long: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Zigzag,
    MinClues,
    MaxNondef,
    Circular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CornerArg {
    Tl,
    Tr,
    Bl,
    Br,
}

impl From<CornerArg> for Corner {
    fn from(c: CornerArg) -> Corner {
        match c {
            CornerArg::Tl => Corner::TopLeft,
            CornerArg::Tr => Corner::TopRight,
            CornerArg::Bl => Corner::BottomLeft,
            CornerArg::Br => Corner::BottomRight,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Auto,
    Exhaustive,
    Witness,
}

impl From<ModeArg> for MaxNondefMode {
    fn from(m: ModeArg) -> MaxNondefMode {
        match m {
            ModeArg::Auto => MaxNondefMode::Auto,
            ModeArg::Exhaustive => MaxNondefMode::Exhaustive,
            ModeArg::Witness => MaxNondefMode::Witness,
        }
    }
}

fn parse_cell(s: &str) -> Result<Cell, String> {
    let (r, c) = s.split_once(',').ok_or_else(|| format!("expected ROW,COL, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok(Cell::new(parse(r)?, parse(c)?))
}

/// Failure of a subcommand; all map to [`EXIT_USAGE`].
#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { &mut *out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, out)),
            Err(e) => Err(CliError::Usage(format!("cannot start {n} threads: {e}"))),
        },
        None => dispatch(cli.command, out),
    };
    let _ = out.flush();
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VIOLATED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn board(rows: usize, cols: usize) -> Result<BoardDims, CliError> {
    Ok(BoardDims::new(rows, cols)?)
}

/// A control that reports task progress on standard error.
fn progress_control(label: &'static str) -> SearchControl {
    SearchControl::new().with_progress(move |done, total| {
        if done == total || done % (total / 100).max(1) == 0 {
            eprint!("\r{label}: {done}/{total} tasks");
            if done == total {
                eprintln!();
            }
        }
    })
}

fn require_long(allowed: bool, what: &str) -> Result<(), CliError> {
    if allowed {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{what} is long-running; pass --allow-long to run it")))
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<bool, CliError> {
    match command {
        Command::Solve { file, retain, cap } => {
            let text = if file.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(&file).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?
            };
            let doc = parse_puzzle(&text)?;
            solve_document(&doc, retain, cap, out)?;
            Ok(true)
        }
        Command::Gen { rows, cols, kind, corner, solution } => {
            let d = board(rows, cols)?;
            let spec = ZigZagSpec::new(corner.into());
            let text = match kind {
                GenKind::Zigzag if solution => zigzag_solution(d, spec).to_string(),
                GenKind::Zigzag => zigzag_clues(d, spec).to_string(),
                GenKind::MinClues => minimal_clues(d).to_string(),
                GenKind::MaxNondef => max_nondefining_clues(d)?.to_string(),
                GenKind::Circular => circular_path(d)?.to_solution().to_string(),
            };
            out.write_all(text.as_bytes())?;
            Ok(true)
        }
        Command::CountPaths { rows, cols, circuits, allow_long } => {
            let d = board(rows, cols)?;
            let long = d.cells() >= LONG_CELLS;
            if long {
                require_long(allow_long, &format!("counting on {d}"))?;
            }
            let count = if circuits {
                count_hamiltonian_circuits(d)
            } else {
                let control = if long { progress_control("count-paths") } else { SearchControl::new() };
                count_hamiltonian_paths_with(d, &control)?
            };
            writeln!(out, "{count}")?;
            Ok(true)
        }
        Command::MinClues { rows, cols, kmax } => {
            let report = min_clue_number_with(board(rows, cols)?, kmax, &SearchControl::new())?;
            write!(out, "{report}")?;
            Ok(true)
        }
        Command::MaxNondef { rows, cols, mode } => {
            let report = max_nondefining_number_with(board(rows, cols)?, mode.into(), &SearchControl::new())?;
            write!(out, "{report}")?;
            Ok(true)
        }
        Command::Verify { suite, max, allow_long } => {
            let control = if suite.is_long() {
                require_long(allow_long, &format!("suite {}", suite.name()))?;
                progress_control("verify")
            } else {
                SearchControl::new()
            };
            run_suite(suite, max.unwrap_or(suite.default_max()), &control, out)
        }
        Command::TwoSolutions { cols, row, col, value } => {
            let (a, b) = two_solutions_single_clue(cols, Cell::new(row, col), value)?;
            write!(out, "{a}\n{b}")?;
            Ok(true)
        }
        Command::SampleK3 { rows, cols, one_at, allow_long } => {
            let d = board(rows, cols)?;
            let long = d.cells() >= LONG_CELLS;
            if long {
                require_long(allow_long, &format!("sampling on {d}"))?;
            }
            let cells = if one_at.is_empty() { suites::default_sample_cells(d) } else { one_at };
            let mut none_found = true;
            for cell in cells {
                let base = ClueSet::from_pairs(d, [(cell, 1)])?;
                let control = if long { progress_control("sample-k3") } else { SearchControl::new() };
                match find_defining_extension(&base, &control)? {
                    None => writeln!(out, "1 at {cell}: no defining 3-clue set")?,
                    Some(found) => {
                        none_found = false;
                        let clues: Vec<String> = found.iter().map(|(c, v)| format!("{c}={v}")).collect();
                        writeln!(out, "1 at {cell}: defined by {}", clues.join(" "))?;
                    }
                }
                out.flush()?;
            }
            // the sample supports the claim that three clues never suffice
            Ok(none_found)
        }
    }
}

/// Writes the status line (`NONE`, `UNIQUE`, `MULTIPLE n` or
/// `MULTIPLE ≥cap`) and the retained solutions, separated by blank lines.
pub fn solve_document(doc: &PuzzleDocument, retain: usize, cap: Option<u64>, out: &mut dyn Write) -> Result<(), CliError> {
    let outcome = Solver::new(doc.clues()).cap(cap).retain(retain).run()?;
    match outcome.count {
        0 => writeln!(out, "NONE")?,
        1 if !outcome.capped => writeln!(out, "UNIQUE")?,
        n if outcome.capped => writeln!(out, "MULTIPLE ≥{n}")?,
        n => writeln!(out, "MULTIPLE {n}")?,
    }
    for s in &outcome.solutions {
        write!(out, "\n{s}")?;
    }
    Ok(())
}
