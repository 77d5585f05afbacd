#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "smsudoku/matching.hpp"
#include "smsudoku/profile.hpp"
#include "smsudoku/square_matrix.hpp"

namespace smsudoku {

// Cell of an n^2 x n^2 grid, 0-based.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// Position of a cell in the box lattice. All fields are 1-based:
// row = (band - 1) n + in_box_row, col = (stack - 1) n + in_box_col.
// Bands are women and stacks are men; the in-box row is the woman's rank of
// the man and the in-box column is the man's rank of the woman.
struct BoxCoordinates {
  int band = 1;
  int stack = 1;
  int in_box_row = 1;
  int in_box_col = 1;
  auto operator<=>(const BoxCoordinates&) const = default;
};

BoxCoordinates to_box_coordinates(Cell cell, int box_size);
Cell to_cell(BoxCoordinates coords, int box_size);

/// An n^2 x n^2 Sudoku grid with box size n. Value 0 marks an empty cell;
/// filled cells hold 1..n^2.
class SudokuGrid {
 public:
  explicit SudokuGrid(int box_size = 1);
  // Row-major values; throws InvalidGrid on wrong length or out-of-range values.
  SudokuGrid(int box_size, std::vector<int> values);
  static SudokuGrid from_rows(int box_size, const std::vector<std::vector<int>>& rows);

  int box_size() const { return n_; }
  int side() const { return n_ * n_; }
  int at(int row, int col) const { return values_[index(row, col)]; }
  int at(Cell cell) const { return at(cell.row, cell.col); }
  void set(int row, int col, int value);
  std::span<const int> values() const { return values_; }

  bool is_complete() const;
  int clue_count() const;

  auto operator<=>(const SudokuGrid&) const = default;

 private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row) * side() + col; }

  int n_;
  std::vector<int> values_;
};

// No repeated digit in any row, column, or box (empty cells ignored).
bool respects_sudoku_rules(const SudokuGrid& grid);

/// The n^2 cells of one digit: one per row, column, and box.
class Template {
 public:
  // Throws InvalidGrid unless the cells form a template.
  Template(int box_size, std::vector<Cell> cells);

  int box_size() const { return n_; }
  // Sorted by row (hence exactly one entry per row).
  const std::vector<Cell>& cells() const { return cells_; }
  bool contains(Cell cell) const;

  bool operator==(const Template&) const = default;

 private:
  int n_;
  std::vector<Cell> cells_;
};

Template profile_to_template(const PreferenceProfile& profile);
PreferenceProfile template_to_profile(const Template& tmpl);

// Every template of box size n, sorted. (n!)^(2n) of them.
std::vector<Template> enumerate_templates(int box_size);

// Blocking pairs read off the picture: a circle left of the man's wife
// column and above the woman's husband row.
std::vector<BlockingPair> geometric_blocking_pairs(const Template& tmpl, const Matching& matching);

// Profile of digit d is element d-1. Throws InvalidGrid if the grid is not
// complete and valid.
std::vector<PreferenceProfile> grid_to_profiles(const SudokuGrid& grid);
// Profile i becomes digit i+1. Throws InvalidGrid naming the two digits and
// the 1-based cell when profiles overlap.
SudokuGrid profiles_to_grid(const std::vector<PreferenceProfile>& profiles);

struct GridFlags {
  bool valid = false;  // complete and obeys Sudoku rules
  bool dg = false;     // every in-box position holds distinct digits
  bool jg = false;     // every digit forms a joint profile
  bool operator==(const GridFlags&) const = default;
};

GridFlags grid_flags(const SudokuGrid& grid);

// Box at (band, stack) equals the box at (band + 1, stack + 1), mod n.
bool is_box_cyclic(const SudokuGrid& grid);

/// Joint-groups grid built from a base box holding 1..n^2. Box B_i is the
/// base box shifted i steps right and i steps down (cyclically) and sits at
/// stack j, band j + i - 1 (mod n, 1-based). The digit at 1-based (a, b) of
/// the base box then has key f(x) = ((b - a + x - 1) mod n) + 1.
SudokuGrid box_cyclic_grid(const SquareMatrix<int>& base_box);

// Key of the digit at 1-based (a, b) of a box-cyclic base box.
KeyFunction box_cyclic_key(int box_size, int a, int b);

// Entry (r, c) lists, ascending, the digits at in-box position (r, c).
// Throws InvalidGrid if the grid is not a complete JG grid.
using PlacementMatrix = SquareMatrix<std::vector<int>>;
PlacementMatrix placement_matrix(const SudokuGrid& grid);

// Entry (r, c) depends only on (c - r) mod n.
bool is_cyclic(const PlacementMatrix& placement);

// Egalitarian cost from the 1-based in-box position: Manhattan distance to
// the top-left corner plus 2.
int manhattan_cost(int in_box_row, int in_box_col);

// Relabel digits so the first row reads 1, 2, ..., n^2.
SudokuGrid relabel_canonical(const SudokuGrid& grid);

}  // namespace smsudoku
