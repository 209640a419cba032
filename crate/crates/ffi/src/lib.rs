//! C ABI for the numbrix engine.
//!
//! Boards and search results cross the boundary as opaque handles that the
//! caller releases with the matching `*_free` function. Every fallible call
//! returns a [`NumbrixStatus`]; on failure a description is available from
//! [`numbrix_last_error`] on the same thread until the next failing call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use numbrix::cli::{format_puzzle, parse_puzzle, PuzzleDocument};
use numbrix::{BoardDims, Cell, ClueSet, Error, SolveOutcome};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumbrixStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Board dimensions, coordinates or clue values are out of range, or a
    /// clue conflicts with one already placed.
    InvalidArgument = 2,
    /// Puzzle text could not be parsed, or was not valid UTF-8.
    Parse = 3,
    /// The request exceeds what the engine will search exhaustively.
    Capacity = 4,
    /// An index into an outcome was out of range, or a buffer was too small.
    OutOfRange = 5,
    /// The engine panicked; the handles passed in should be discarded.
    Internal = 6,
}

/// A board with its clues.
pub struct NumbrixPuzzle {
    clues: ClueSet,
}

/// The result of [`numbrix_solve`].
pub struct NumbrixOutcome {
    outcome: SolveOutcome,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    let message = CString::new(message).expect("interior nul bytes were replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn fail(status: NumbrixStatus, message: impl Into<String>) -> NumbrixStatus {
    set_error(message);
    status
}

fn core_error(err: Error) -> NumbrixStatus {
    let status = match err {
        Error::Parse { .. } => NumbrixStatus::Parse,
        Error::Capacity { .. } => NumbrixStatus::Capacity,
        _ => NumbrixStatus::InvalidArgument,
    };
    fail(status, err.to_string())
}

/// Runs `body`, converting a panic into [`NumbrixStatus::Internal`].
fn guard(body: impl FnOnce() -> NumbrixStatus) -> NumbrixStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(NumbrixStatus::Internal, format!("internal error: {detail}"))
        }
    }
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(NumbrixStatus::NullPointer, concat!("`", stringify!($p), "` is null"));
        })+
    };
}

fn dims(rows: usize, cols: usize) -> Result<BoardDims, NumbrixStatus> {
    BoardDims::new(rows, cols).map_err(core_error)
}

fn cell_in(dims: BoardDims, row: usize, col: usize) -> Result<Cell, NumbrixStatus> {
    let cell = Cell::new(row, col);
    if dims.contains(cell) {
        Ok(cell)
    } else {
        Err(core_error(Error::OutOfBounds { cell, dims }))
    }
}

fn into_handle<T>(value: T, out: *mut *mut T) -> NumbrixStatus {
    // SAFETY: callers check `out` for null before reaching here.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    NumbrixStatus::Ok
}

/// Message describing the most recent failure on this thread, or null if
/// nothing has failed yet. The string is owned by the library and stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn numbrix_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Creates an empty `rows` x `cols` board.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn numbrix_puzzle_new(rows: usize, cols: usize, out: *mut *mut NumbrixPuzzle) -> NumbrixStatus {
    non_null!(out);
    guard(|| match dims(rows, cols) {
        Ok(d) => into_handle(NumbrixPuzzle { clues: ClueSet::new(d) }, out),
        Err(status) => status,
    })
}

/// Parses puzzle text: a `rows cols` header line followed by one line per
/// row of whitespace-separated values, `0` marking an empty cell. Blank
/// lines and lines starting with `#` are ignored.
///
/// # Safety
/// `text` must be null or a nul-terminated string; `out` must be null or
/// valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn numbrix_puzzle_parse(text: *const c_char, out: *mut *mut NumbrixPuzzle) -> NumbrixStatus {
    non_null!(text, out);
    // SAFETY: `text` is non-null and nul-terminated per the contract.
    let text = unsafe { CStr::from_ptr(text) };
    guard(|| {
        let Ok(text) = text.to_str() else {
            return fail(NumbrixStatus::Parse, "puzzle text is not valid UTF-8");
        };
        match parse_puzzle(text) {
            Ok(doc) => into_handle(NumbrixPuzzle { clues: doc.into_clues() }, out),
            Err(err) => core_error(err),
        }
    })
}

/// Releases a puzzle. Null is ignored.
///
/// # Safety
/// `puzzle` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn numbrix_puzzle_free(puzzle: *mut NumbrixPuzzle) {
    if !puzzle.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(puzzle) });
    }
}

/// Writes the board dimensions.
///
/// # Safety
/// `puzzle` must be null or a live handle; `rows` and `cols` must be null
/// or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn numbrix_puzzle_dims(puzzle: *const NumbrixPuzzle, rows: *mut usize, cols: *mut usize) -> NumbrixStatus {
    non_null!(puzzle, rows, cols);
    // SAFETY: non-null pointers are valid per the contract.
    let d = unsafe { (*puzzle).clues.dims() };
    unsafe {
        *rows = d.rows();
        *cols = d.cols();
    }
    NumbrixStatus::Ok
}

/// Places clue `value` at (`row`, `col`), or clears the cell when `value`
/// is 0. Fails if the value is out of range or already used elsewhere.
///
/// # Safety
/// `puzzle` must be null or a live handle not used concurrently.
#[no_mangle]
pub unsafe extern "C" fn numbrix_puzzle_set_clue(puzzle: *mut NumbrixPuzzle, row: usize, col: usize, value: u32) -> NumbrixStatus {
    non_null!(puzzle);
    // SAFETY: non-null and exclusively borrowed per the contract.
    let clues = unsafe { &mut (*puzzle).clues };
    guard(|| {
        let cell = match cell_in(clues.dims(), row, col) {
            Ok(cell) => cell,
            Err(status) => return status,
        };
        if value == 0 {
            clues.remove(cell);
            return NumbrixStatus::Ok;
        }
        let previous = clues.remove(cell);
        match clues.insert(cell, value as usize) {
            Ok(()) => NumbrixStatus::Ok,
            Err(err) => {
                if let Some(v) = previous {
                    clues.insert(cell, v as usize).expect("restoring the previous clue");
                }
                core_error(err)
            }
        }
    })
}

/// Writes the clue at (`row`, `col`), or 0 if the cell is empty.
///
/// # Safety
/// `puzzle` must be null or a live handle; `value` must be null or valid
/// for writing.
#[no_mangle]
pub unsafe extern "C" fn numbrix_puzzle_get_clue(puzzle: *const NumbrixPuzzle, row: usize, col: usize, value: *mut u32) -> NumbrixStatus {
    non_null!(puzzle, value);
    // SAFETY: non-null pointers are valid per the contract.
    let clues = unsafe { &(*puzzle).clues };
    match cell_in(clues.dims(), row, col) {
        Ok(cell) => {
            unsafe { *value = clues.get(cell).map_or(0, u32::from) };
            NumbrixStatus::Ok
        }
        Err(status) => status,
    }
}

/// Renders the puzzle in the text format accepted by
/// [`numbrix_puzzle_parse`]. Release the string with [`numbrix_string_free`].
///
/// # Safety
/// `puzzle` must be null or a live handle; `out` must be null or valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn numbrix_puzzle_format(puzzle: *const NumbrixPuzzle, out: *mut *mut c_char) -> NumbrixStatus {
    non_null!(puzzle, out);
    // SAFETY: non-null pointers are valid per the contract.
    let clues = unsafe { &(*puzzle).clues };
    guard(|| {
        let text = format_puzzle(&PuzzleDocument::from_clues(clues.clone()));
        let text = CString::new(text).expect("formatted puzzles contain no nul bytes");
        unsafe { *out = text.into_raw() };
        NumbrixStatus::Ok
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn numbrix_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string came from `CString::into_raw` and is freed once.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Searches for solutions matching the puzzle's clues. Counting stops at
/// `cap` solutions (0 for no limit); the `retain` lexicographically smallest
/// solutions are kept for inspection.
///
/// # Safety
/// `puzzle` must be null or a live handle; `out` must be null or valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn numbrix_solve(puzzle: *const NumbrixPuzzle, cap: u64, retain: usize, out: *mut *mut NumbrixOutcome) -> NumbrixStatus {
    non_null!(puzzle, out);
    // SAFETY: non-null pointers are valid per the contract.
    let clues = unsafe { &(*puzzle).clues };
    guard(|| {
        let cap = (cap > 0).then_some(cap);
        into_handle(NumbrixOutcome { outcome: numbrix::solve(clues, cap, retain) }, out)
    })
}

/// Writes whether the clues admit exactly one solution.
///
/// # Safety
/// `puzzle` must be null or a live handle; `unique` must be null or valid
/// for writing.
#[no_mangle]
pub unsafe extern "C" fn numbrix_defines_puzzle(puzzle: *const NumbrixPuzzle, unique: *mut bool) -> NumbrixStatus {
    non_null!(puzzle, unique);
    // SAFETY: non-null pointers are valid per the contract.
    let clues = unsafe { &(*puzzle).clues };
    guard(|| {
        let result = numbrix::defines_puzzle(clues);
        unsafe { *unique = result };
        NumbrixStatus::Ok
    })
}

/// Releases an outcome. Null is ignored.
///
/// # Safety
/// `outcome` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn numbrix_outcome_free(outcome: *mut NumbrixOutcome) {
    if !outcome.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(outcome) });
    }
}

/// Writes the number of solutions found and whether counting stopped at the
/// cap (in which case the true count is at least `count`).
///
/// # Safety
/// `outcome` must be null or a live handle; `count` and `capped` must be
/// null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn numbrix_outcome_count(outcome: *const NumbrixOutcome, count: *mut u64, capped: *mut bool) -> NumbrixStatus {
    non_null!(outcome, count, capped);
    // SAFETY: non-null pointers are valid per the contract.
    let o = unsafe { &(*outcome).outcome };
    unsafe {
        *count = o.count;
        *capped = o.capped;
    }
    NumbrixStatus::Ok
}

/// Number of solutions retained in the outcome.
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn numbrix_outcome_retained(outcome: *const NumbrixOutcome) -> usize {
    if outcome.is_null() {
        return 0;
    }
    // SAFETY: non-null handles are live per the contract.
    unsafe { (*outcome).outcome.solutions.len() }
}

/// Copies retained solution `index` into `values` in row-major order. The
/// buffer must hold at least rows x cols entries.
///
/// # Safety
/// `outcome` must be null or a live handle; `values` must be null or valid
/// for writing `len` entries.
#[no_mangle]
pub unsafe extern "C" fn numbrix_outcome_solution(outcome: *const NumbrixOutcome, index: usize, values: *mut u32, len: usize) -> NumbrixStatus {
    non_null!(outcome, values);
    // SAFETY: non-null handles are live per the contract.
    let o = unsafe { &(*outcome).outcome };
    let Some(solution) = o.solutions.get(index) else {
        return fail(NumbrixStatus::OutOfRange, format!("solution {index} of {} requested", o.solutions.len()));
    };
    let src = solution.values();
    if len < src.len() {
        return fail(NumbrixStatus::OutOfRange, format!("buffer holds {len} values, {} needed", src.len()));
    }
    // SAFETY: `values` is valid for `len >= src.len()` writes.
    let dst = unsafe { std::slice::from_raw_parts_mut(values, src.len()) };
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = u32::from(s);
    }
    NumbrixStatus::Ok
}

/// Counts Hamiltonian paths on a `rows` x `cols` board, counting each path
/// once per direction. Runtime grows steeply beyond 49 cells.
///
/// # Safety
/// `count` must be null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn numbrix_count_paths(rows: usize, cols: usize, count: *mut u64) -> NumbrixStatus {
    non_null!(count);
    guard(|| match dims(rows, cols) {
        Ok(d) => {
            let n = numbrix::count_hamiltonian_paths(d);
            unsafe { *count = n };
            NumbrixStatus::Ok
        }
        Err(status) => status,
    })
}

/// Counts Hamiltonian circuits on a `rows` x `cols` board, each undirected
/// cycle once.
///
/// # Safety
/// `count` must be null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn numbrix_count_circuits(rows: usize, cols: usize, count: *mut u64) -> NumbrixStatus {
    non_null!(count);
    guard(|| match dims(rows, cols) {
        Ok(d) => {
            let n = numbrix::count_hamiltonian_circuits(d);
            unsafe { *count = n };
            NumbrixStatus::Ok
        }
        Err(status) => status,
    })
}
