#ifndef NUMBRIX_H
#define NUMBRIX_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes returned by every fallible function.
typedef enum NumbrixStatus {
  NUMBRIX_STATUS_OK = 0,
  // A required pointer argument was null.
  NUMBRIX_STATUS_NULL_POINTER = 1,
  // Board dimensions, coordinates or clue values are out of range, or a
  // clue conflicts with one already placed.
  NUMBRIX_STATUS_INVALID_ARGUMENT = 2,
  // Puzzle text could not be parsed, or was not valid UTF-8.
  NUMBRIX_STATUS_PARSE = 3,
  // The request exceeds what the engine will search exhaustively.
  NUMBRIX_STATUS_CAPACITY = 4,
  // An index into an outcome was out of range, or a buffer was too small.
  NUMBRIX_STATUS_OUT_OF_RANGE = 5,
  // The engine panicked; the handles passed in should be discarded.
  NUMBRIX_STATUS_INTERNAL = 6,
} NumbrixStatus;

// The result of [`numbrix_solve`].
typedef struct NumbrixOutcome NumbrixOutcome;

// A board with its clues.
typedef struct NumbrixPuzzle NumbrixPuzzle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread, or null if
// nothing has failed yet. The string is owned by the library and stays
// valid until the next failing call on the same thread.
const char *numbrix_last_error(void);

// Creates an empty `rows` x `cols` board.
//
// # Safety
// `out` must be null or valid for writing one pointer.
enum NumbrixStatus numbrix_puzzle_new(uintptr_t rows, uintptr_t cols, struct NumbrixPuzzle **out);

// Parses puzzle text: a `rows cols` header line followed by one line per
// row of whitespace-separated values, `0` marking an empty cell. Blank
// lines and lines starting with `#` are ignored.
//
// # Safety
// `text` must be null or a nul-terminated string; `out` must be null or
// valid for writing one pointer.
enum NumbrixStatus numbrix_puzzle_parse(const char *text, struct NumbrixPuzzle **out);

// Releases a puzzle. Null is ignored.
//
// # Safety
// `puzzle` must be null or a handle from this library not yet freed.
void numbrix_puzzle_free(struct NumbrixPuzzle *puzzle);

// Writes the board dimensions.
//
// # Safety
// `puzzle` must be null or a live handle; `rows` and `cols` must be null
// or valid for writing.
enum NumbrixStatus numbrix_puzzle_dims(const struct NumbrixPuzzle *puzzle,
                                       uintptr_t *rows,
                                       uintptr_t *cols);

// Places clue `value` at (`row`, `col`), or clears the cell when `value`
// is 0. Fails if the value is out of range or already used elsewhere.
//
// # Safety
// `puzzle` must be null or a live handle not used concurrently.
enum NumbrixStatus numbrix_puzzle_set_clue(struct NumbrixPuzzle *puzzle,
                                           uintptr_t row,
                                           uintptr_t col,
                                           uint32_t value);

// Writes the clue at (`row`, `col`), or 0 if the cell is empty.
//
// # Safety
// `puzzle` must be null or a live handle; `value` must be null or valid
// for writing.
enum NumbrixStatus numbrix_puzzle_get_clue(const struct NumbrixPuzzle *puzzle,
                                           uintptr_t row,
                                           uintptr_t col,
                                           uint32_t *value);

// Renders the puzzle in the text format accepted by
// [`numbrix_puzzle_parse`]. Release the string with [`numbrix_string_free`].
//
// # Safety
// `puzzle` must be null or a live handle; `out` must be null or valid for
// writing one pointer.
enum NumbrixStatus numbrix_puzzle_format(const struct NumbrixPuzzle *puzzle, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void numbrix_string_free(char *s);

// Searches for solutions matching the puzzle's clues. Counting stops at
// `cap` solutions (0 for no limit); the `retain` lexicographically smallest
// solutions are kept for inspection.
//
// # Safety
// `puzzle` must be null or a live handle; `out` must be null or valid for
// writing one pointer.
enum NumbrixStatus numbrix_solve(const struct NumbrixPuzzle *puzzle,
                                 uint64_t cap,
                                 uintptr_t retain,
                                 struct NumbrixOutcome **out);

// Writes whether the clues admit exactly one solution.
//
// # Safety
// `puzzle` must be null or a live handle; `unique` must be null or valid
// for writing.
enum NumbrixStatus numbrix_defines_puzzle(const struct NumbrixPuzzle *puzzle, bool *unique);

// Releases an outcome. Null is ignored.
//
// # Safety
// `outcome` must be null or a handle from this library not yet freed.
void numbrix_outcome_free(struct NumbrixOutcome *outcome);

// Writes the number of solutions found and whether counting stopped at the
// cap (in which case the true count is at least `count`).
//
// # Safety
// `outcome` must be null or a live handle; `count` and `capped` must be
// null or valid for writing.
enum NumbrixStatus numbrix_outcome_count(const struct NumbrixOutcome *outcome,
                                         uint64_t *count,
                                         bool *capped);

// Number of solutions retained in the outcome.
//
// # Safety
// `outcome` must be null or a live handle.
uintptr_t numbrix_outcome_retained(const struct NumbrixOutcome *outcome);

// Copies retained solution `index` into `values` in row-major order. The
// buffer must hold at least rows x cols entries.
//
// # Safety
// `outcome` must be null or a live handle; `values` must be null or valid
// for writing `len` entries.
enum NumbrixStatus numbrix_outcome_solution(const struct NumbrixOutcome *outcome,
                                            uintptr_t index,
                                            uint32_t *values,
                                            uintptr_t len);

// Counts Hamiltonian paths on a `rows` x `cols` board, counting each path
// once per direction. Runtime grows steeply beyond 49 cells.
//
// # Safety
// `count` must be null or valid for writing.
enum NumbrixStatus numbrix_count_paths(uintptr_t rows, uintptr_t cols, uint64_t *count);

// Counts Hamiltonian circuits on a `rows` x `cols` board, each undirected
// cycle once.
//
// # Safety
// `count` must be null or valid for writing.
enum NumbrixStatus numbrix_count_circuits(uintptr_t rows, uintptr_t cols, uint64_t *count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NUMBRIX_H */
