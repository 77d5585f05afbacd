#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "smsudoku/grid.hpp"

namespace smsudoku {

// standard: rows, columns, boxes. dg: additionally every in-box position
// holds distinct digits. jg: additionally every digit forms a joint profile.
enum class Variant { standard, dg, jg };

const char* to_string(Variant variant);
std::optional<Variant> parse_variant(std::string_view name);

struct Puzzle {
  SudokuGrid grid;
  Variant variant = Variant::standard;
};

// Complete grid that obeys the rules of the variant.
bool satisfies_variant(const SudokuGrid& grid, Variant variant);

// Throws InconsistentPuzzle if two clues already break a rule of the variant.
void check_clues(const Puzzle& puzzle);

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

// undetermined: exactly one solution found and the cap (1) stopped the search.
enum class SolveStatus { none, unique, multiple, undetermined };

const char* to_string(SolveStatus status);

struct SolveReport {
  std::vector<SudokuGrid> solutions;  // sorted row-major lexicographically
  bool reached_cap = false;           // search stopped at the cap
  std::uint64_t nodes_expanded = 0;

  SolveStatus status() const;
};

struct SolveOptions {
  std::size_t cap = 2;
  // Off: plain backtracking over cells in row-major order with no inference.
  bool propagate = true;
};

/// Finds up to `cap` completions of the puzzle. With propagation the search
/// branches on the cell with fewest candidates and runs naked/hidden singles
/// plus the variant rules (dg groups; jg per-digit keys, where placing d at
/// in-box (r, c) forbids d at every (r, c') and (r', c)). Supports box sizes
/// up to 5. Throws InconsistentPuzzle for contradictory clues.
SolveReport solve(const Puzzle& puzzle, SolveOptions options = {});

bool has_unique_solution(const Puzzle& puzzle);

struct ClueBounds {
  // Fewest clues such that every clue subset of that size, taken from any
  // complete n = 2 grid, completes uniquely.
  int guarantee_threshold = 0;
  // A standard puzzle with threshold - 1 clues and exactly two solutions.
  Puzzle witness_puzzle;
  std::uint64_t puzzles_checked = 0;
};

// Exhaustive over all 288 complete n = 2 grids.
ClueBounds n2_clue_bounds();

struct JgMinimum {
  int min_clues = 0;
  Puzzle witness_puzzle;  // a uniquely solvable JG puzzle with min_clues clues
};

// Minimum clue count of a uniquely solvable n = 2 JG puzzle, by searching
// clue subsets of increasing size of a JG grid. All n = 2 JG grids are
// relabelings of each other, so one grid suffices.
JgMinimum jg_min_clues_n2();

// Every complete grid of box size n (n <= 2 in practice), sorted.
std::vector<SudokuGrid> all_complete_grids(int box_size, Variant variant = Variant::standard);

}  // namespace smsudoku
