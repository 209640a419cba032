#include <stdio.h>
#include <string.h>

#include "numbrix.h"

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      const char *err = numbrix_last_error();                              \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,       \
              err ? err : "no error");                                     \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  const char *text = "3 3\n9 0 3\n0 0 0\n0 0 1\n";
  NumbrixPuzzle *puzzle = NULL;
  CHECK(numbrix_puzzle_parse(text, &puzzle) == NUMBRIX_STATUS_OK);

  NumbrixOutcome *outcome = NULL;
  CHECK(numbrix_solve(puzzle, 0, 1, &outcome) == NUMBRIX_STATUS_OK);
  uint64_t count = 0;
  bool capped = true;
  CHECK(numbrix_outcome_count(outcome, &count, &capped) == NUMBRIX_STATUS_OK);
  CHECK(count == 1 && !capped);
  CHECK(numbrix_outcome_retained(outcome) == 1);

  uint32_t values[9];
  const uint32_t expected[9] = {9, 4, 3, 8, 5, 2, 7, 6, 1};
  CHECK(numbrix_outcome_solution(outcome, 0, values, 9) == NUMBRIX_STATUS_OK);
  CHECK(memcmp(values, expected, sizeof values) == 0);
  numbrix_outcome_free(outcome);

  char *formatted = NULL;
  CHECK(numbrix_puzzle_format(puzzle, &formatted) == NUMBRIX_STATUS_OK);
  CHECK(strcmp(formatted, text) == 0);
  numbrix_string_free(formatted);

  CHECK(numbrix_puzzle_set_clue(puzzle, 1, 1, 3) == NUMBRIX_STATUS_INVALID_ARGUMENT);
  CHECK(numbrix_last_error() != NULL);
  numbrix_puzzle_free(puzzle);

  CHECK(numbrix_count_paths(4, 4, &count) == NUMBRIX_STATUS_OK);
  CHECK(count == 552);
  CHECK(numbrix_count_circuits(4, 4, &count) == NUMBRIX_STATUS_OK);
  CHECK(count == 6);

  printf("ok\n");
  return 0;
}
