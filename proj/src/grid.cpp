#include "smsudoku/grid.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "smsudoku/errors.hpp"

namespace smsudoku {

namespace {

int wrap(int value, int n) { return ((value % n) + n) % n; }

std::string cell_name(Cell cell) {
  return "(" + std::to_string(cell.row + 1) + "," + std::to_string(cell.col + 1) + ")";
}

// Circle of the template inside box (band, stack), both 0-based.
SquareMatrix<Cell> circles_by_box(const Template& tmpl) {
  const int n = tmpl.box_size();
  SquareMatrix<Cell> boxes(n);
  for (const Cell& cell : tmpl.cells()) boxes(cell.row / n, cell.col / n) = cell;
  return boxes;
}

}  // namespace

BoxCoordinates to_box_coordinates(Cell cell, int box_size) {
  return {cell.row / box_size + 1, cell.col / box_size + 1, cell.row % box_size + 1, cell.col % box_size + 1};
}

Cell to_cell(BoxCoordinates coords, int box_size) {
  return {(coords.band - 1) * box_size + coords.in_box_row - 1, (coords.stack - 1) * box_size + coords.in_box_col - 1};
}

SudokuGrid::SudokuGrid(int box_size) : n_(box_size) {
  if (box_size < 1) throw InvalidGrid("box size must be positive");
  values_.assign(static_cast<std::size_t>(side()) * side(), 0);
}

SudokuGrid::SudokuGrid(int box_size, std::vector<int> values) : n_(box_size), values_(std::move(values)) {
  if (box_size < 1) throw InvalidGrid("box size must be positive");
  if (values_.size() != static_cast<std::size_t>(side()) * side()) {
    throw InvalidGrid("grid needs " + std::to_string(side() * side()) + " cells, got " +
                      std::to_string(values_.size()));
  }
  for (int v : values_)
    if (v < 0 || v > side()) throw InvalidGrid("cell value " + std::to_string(v) + " out of range");
}

SudokuGrid SudokuGrid::from_rows(int box_size, const std::vector<std::vector<int>>& rows) {
  std::vector<int> values;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != box_size * box_size) throw InvalidGrid("row has the wrong length");
    values.insert(values.end(), row.begin(), row.end());
  }
  return SudokuGrid(box_size, std::move(values));
}

void SudokuGrid::set(int row, int col, int value) {
  if (value < 0 || value > side()) throw InvalidGrid("cell value " + std::to_string(value) + " out of range");
  values_[index(row, col)] = value;
}

bool SudokuGrid::is_complete() const {
  return std::none_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
}

int SudokuGrid::clue_count() const {
  return static_cast<int>(std::count_if(values_.begin(), values_.end(), [](int v) { return v != 0; }));
}

bool respects_sudoku_rules(const SudokuGrid& grid) {
  const int n = grid.box_size();
  const int side = grid.side();
  // unit k: rows 0..side-1, columns side..2side-1, boxes 2side..3side-1
  std::vector<std::vector<bool>> seen(3 * side, std::vector<bool>(side + 1, false));
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const int v = grid.at(r, c);
      if (v == 0) continue;
      for (int unit : {r, side + c, 2 * side + (r / n) * n + c / n}) {
        if (seen[unit][v]) return false;
        seen[unit][v] = true;
      }
    }
  }
  return true;
}

Template::Template(int box_size, std::vector<Cell> cells) : n_(box_size), cells_(std::move(cells)) {
  const int side = n_ * n_;
  if (static_cast<int>(cells_.size()) != side) {
    throw InvalidGrid("template needs " + std::to_string(side) + " cells, got " + std::to_string(cells_.size()));
  }
  std::sort(cells_.begin(), cells_.end());
  std::vector<bool> row_used(side, false), col_used(side, false), box_used(side, false);
  for (const Cell& cell : cells_) {
    if (cell.row < 0 || cell.row >= side || cell.col < 0 || cell.col >= side) {
      throw InvalidGrid("template cell " + cell_name(cell) + " outside the grid");
    }
    const int box = (cell.row / n_) * n_ + cell.col / n_;
    if (row_used[cell.row] || col_used[cell.col] || box_used[box]) {
      throw InvalidGrid("template has two cells sharing a row, column, or box at " + cell_name(cell));
    }
    row_used[cell.row] = col_used[cell.col] = box_used[box] = true;
  }
}

bool Template::contains(Cell cell) const { return std::binary_search(cells_.begin(), cells_.end(), cell); }

Template profile_to_template(const PreferenceProfile& profile) {
  const int n = profile.size();
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int w = 0; w < n; ++w)
    for (int m = 0; m < n; ++m)
      cells.push_back(to_cell({w + 1, m + 1, profile.woman_rank(w, m), profile.man_rank(m, w)}, n));
  return Template(n, std::move(cells));
}

PreferenceProfile template_to_profile(const Template& tmpl) {
  const int n = tmpl.box_size();
  RankMatrix men(n), women(n);
  for (const Cell& cell : tmpl.cells()) {
    const BoxCoordinates at = to_box_coordinates(cell, n);
    women(at.band - 1, at.stack - 1) = at.in_box_row;
    men(at.stack - 1, at.band - 1) = at.in_box_col;
  }
  return PreferenceProfile(std::move(men), std::move(women));
}

std::vector<Template> enumerate_templates(int box_size) {
  const int n = box_size;
  const int side = n * n;
  std::vector<Template> result;
  std::vector<Cell> cells;
  std::vector<bool> col_used(side, false), box_used(side, false);
  std::function<void(int)> place = [&](int row) {
    if (row == side) {
      result.emplace_back(n, cells);
      return;
    }
    for (int col = 0; col < side; ++col) {
      const int box = (row / n) * n + col / n;
      if (col_used[col] || box_used[box]) continue;
      col_used[col] = box_used[box] = true;
      cells.push_back({row, col});
      place(row + 1);
      cells.pop_back();
      col_used[col] = box_used[box] = false;
    }
  };
  place(0);
  return result;
}

std::vector<BlockingPair> geometric_blocking_pairs(const Template& tmpl, const Matching& matching) {
  const int n = tmpl.box_size();
  const SquareMatrix<Cell> circles = circles_by_box(tmpl);
  std::vector<BlockingPair> result;
  for (int m = 0; m < n; ++m) {
    // Column of the man's current wife, within his stack.
    const int wife_col = circles(matching.wife_of(m), m).col;
    for (int w = 0; w < n; ++w) {
      // Row of the woman's current husband, within her band.
      const int husband_row = circles(w, matching.husband_of(w)).row;
      const Cell circle = circles(w, m);
      if (circle.col < wife_col && circle.row < husband_row) result.push_back({m, w});
    }
  }
  return result;
}

std::vector<PreferenceProfile> grid_to_profiles(const SudokuGrid& grid) {
  if (!grid.is_complete()) throw InvalidGrid("grid is incomplete");
  if (!respects_sudoku_rules(grid)) throw InvalidGrid("grid breaks Sudoku rules");
  const int side = grid.side();
  std::vector<std::vector<Cell>> cells(side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) cells[grid.at(r, c) - 1].push_back({r, c});
  std::vector<PreferenceProfile> profiles;
  profiles.reserve(side);
  for (auto& digit_cells : cells) profiles.push_back(template_to_profile(Template(grid.box_size(), std::move(digit_cells))));
  return profiles;
}

SudokuGrid profiles_to_grid(const std::vector<PreferenceProfile>& profiles) {
  if (profiles.empty()) throw InvalidGrid("no profiles given");
  const int n = profiles.front().size();
  if (static_cast<int>(profiles.size()) != n * n) {
    throw InvalidGrid("need " + std::to_string(n * n) + " profiles, got " + std::to_string(profiles.size()));
  }
  SudokuGrid grid(n);
  for (std::size_t d = 0; d < profiles.size(); ++d) {
    if (profiles[d].size() != n) throw InvalidGrid("profiles have different sizes");
    const Template tmpl = profile_to_template(profiles[d]);
    for (const Cell& cell : tmpl.cells()) {
      if (const int other = grid.at(cell); other != 0) {
        throw InvalidGrid("profiles for digits " + std::to_string(other) + " and " + std::to_string(d + 1) +
                          " overlap at cell " + cell_name(cell));
      }
      grid.set(cell.row, cell.col, static_cast<int>(d) + 1);
    }
  }
  return grid;
}

GridFlags grid_flags(const SudokuGrid& grid) {
  GridFlags flags;
  if (!grid.is_complete() || !respects_sudoku_rules(grid)) return flags;
  flags.valid = true;

  const int n = grid.box_size();
  const int side = grid.side();
  std::vector<std::set<int>> at_position(side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) at_position[(r % n) * n + c % n].insert(grid.at(r, c));
  flags.dg = std::all_of(at_position.begin(), at_position.end(),
                         [&](const std::set<int>& digits) { return static_cast<int>(digits.size()) == side; });

  const auto profiles = grid_to_profiles(grid);
  flags.jg = std::all_of(profiles.begin(), profiles.end(),
                         [](const PreferenceProfile& p) { return extract_key(p).has_value(); });
  return flags;
}

bool is_box_cyclic(const SudokuGrid& grid) {
  const int n = grid.box_size();
  for (int band = 0; band < n; ++band) {
    for (int stack = 0; stack < n; ++stack) {
      const int next_band = (band + 1) % n;
      const int next_stack = (stack + 1) % n;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (grid.at(band * n + r, stack * n + c) != grid.at(next_band * n + r, next_stack * n + c)) return false;
    }
  }
  return true;
}

SudokuGrid box_cyclic_grid(const SquareMatrix<int>& base_box) {
  const int n = base_box.size();
  if (n < 1) throw InvalidGrid("base box is empty");
  std::vector<bool> seen(n * n + 1, false);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int v = base_box(r, c);
      if (v < 1 || v > n * n || seen[v]) throw InvalidGrid("base box is not an arrangement of 1..n^2");
      seen[v] = true;
    }
  }
  SudokuGrid grid(n);
  for (int band = 0; band < n; ++band) {
    for (int stack = 0; stack < n; ++stack) {
      // band = stack + i - 1 (mod n) picks B_i; B_i is the base shifted by i.
      const int i = wrap(band - stack, n) + 1;
      const int shift = i % n;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          grid.set(band * n + r, stack * n + c, base_box(wrap(r - shift, n), wrap(c - shift, n)));
    }
  }
  return grid;
}

KeyFunction box_cyclic_key(int box_size, int a, int b) {
  std::vector<int> images(box_size);
  for (int x = 1; x <= box_size; ++x) images[x - 1] = wrap(b - a + x - 1, box_size) + 1;
  return KeyFunction(std::move(images));
}

PlacementMatrix placement_matrix(const SudokuGrid& grid) {
  const GridFlags flags = grid_flags(grid);
  if (!flags.valid) throw InvalidGrid("placement matrix needs a complete valid grid");
  if (!flags.jg) throw InvalidGrid("placement matrix needs a joint-groups grid");
  const int n = grid.box_size();
  PlacementMatrix placement(n);
  for (int r = 0; r < grid.side(); ++r) {
    for (int c = 0; c < grid.side(); ++c) {
      auto& digits = placement(r % n, c % n);
      const int v = grid.at(r, c);
      if (std::find(digits.begin(), digits.end(), v) == digits.end()) digits.push_back(v);
    }
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) std::sort(placement(r, c).begin(), placement(r, c).end());
  return placement;
}

bool is_cyclic(const PlacementMatrix& placement) {
  const int n = placement.size();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (placement(r, c) != placement((r + 1) % n, (c + 1) % n)) return false;
  return true;
}

int manhattan_cost(int in_box_row, int in_box_col) { return (in_box_row - 1) + (in_box_col - 1) + 2; }

SudokuGrid relabel_canonical(const SudokuGrid& grid) {
  const int side = grid.side();
  std::vector<int> relabel(side + 1, 0);
  for (int c = 0; c < side; ++c) {
    const int v = grid.at(0, c);
    if (v == 0 || relabel[v] != 0) throw InvalidGrid("first row must hold every digit once to relabel");
    relabel[v] = c + 1;
  }
  std::vector<int> values(grid.values().begin(), grid.values().end());
  for (int& v : values) v = relabel[v];
  return SudokuGrid(grid.box_size(), std::move(values));
}

}  // namespace smsudoku
