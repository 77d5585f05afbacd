#include "smsudoku/solver.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "smsudoku/errors.hpp"

namespace smsudoku {

namespace {

constexpr int kMaxBoxSize = 5;

enum class Rule { row, column, box, dg_group, jg_key };

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::row:
      return "row";
    case Rule::column:
      return "column";
    case Rule::box:
      return "box";
    case Rule::dg_group:
      return "disjoint group";
    case Rule::jg_key:
      return "joint-groups key";
  }
  return "row";
}

// First rule that forbids cells a and b from holding the same digit.
std::optional<Rule> shared_rule(int n, int a, int b, Variant variant) {
  const int side = n * n;
  const int ra = a / side, ca = a % side, rb = b / side, cb = b % side;
  if (ra == rb) return Rule::row;
  if (ca == cb) return Rule::column;
  if (ra / n == rb / n && ca / n == cb / n) return Rule::box;
  const bool same_in_row = ra % n == rb % n;
  const bool same_in_col = ca % n == cb % n;
  if (variant == Variant::dg && same_in_row && same_in_col) return Rule::dg_group;
  if (variant == Variant::jg && same_in_row != same_in_col) return Rule::jg_key;
  return std::nullopt;
}

struct Layout {
  int n = 0;
  int side = 0;
  int cells = 0;
  std::vector<std::vector<int>> peers;
  // Groups that must contain every digit exactly once.
  std::vector<std::vector<int>> units;
};

Layout make_layout(int n, Variant variant) {
  if (n > kMaxBoxSize) throw TooLarge("solver supports box sizes up to " + std::to_string(kMaxBoxSize));
  Layout layout;
  layout.n = n;
  layout.side = n * n;
  layout.cells = layout.side * layout.side;
  layout.peers.resize(layout.cells);
  for (int a = 0; a < layout.cells; ++a)
    for (int b = 0; b < layout.cells; ++b)
      if (a != b && shared_rule(n, a, b, variant)) layout.peers[a].push_back(b);

  const int side = layout.side;
  const int groups = variant == Variant::dg ? 4 : 3;
  layout.units.assign(static_cast<std::size_t>(groups) * side, {});
  for (int cell = 0; cell < layout.cells; ++cell) {
    const int r = cell / side, c = cell % side;
    layout.units[r].push_back(cell);
    layout.units[side + c].push_back(cell);
    layout.units[2 * side + (r / n) * n + c / n].push_back(cell);
    if (variant == Variant::dg) layout.units[3 * side + (r % n) * n + c % n].push_back(cell);
  }
  return layout;
}

struct State {
  std::vector<std::uint32_t> candidates;
  std::vector<int> values;
};

class Search {
 public:
  Search(const Layout& layout, const SolveOptions& options, SolveReport& report)
      : layout_(layout), options_(options), report_(report), all_digits_((std::uint32_t{1} << layout.side) - 1) {}

  void solve_propagating(const SudokuGrid& clues) {
    State state{std::vector<std::uint32_t>(layout_.cells, all_digits_), std::vector<int>(layout_.cells, 0)};
    for (int cell = 0; cell < layout_.cells; ++cell) {
      const int v = clues.values()[cell];
      if (v != 0 && !assign(state, cell, v)) return;
    }
    if (!hidden_singles(state)) return;
    search(std::move(state));
  }

  void solve_plain(const SudokuGrid& clues) {
    std::vector<int> values(clues.values().begin(), clues.values().end());
    backtrack(values, 0);
  }

 private:
  bool done() const { return report_.reached_cap; }

  void record(const std::vector<int>& values) {
    report_.solutions.emplace_back(layout_.n, values);
    if (report_.solutions.size() >= options_.cap) report_.reached_cap = true;
  }

  bool assign(State& state, int cell, int digit) {
    const std::uint32_t bit = std::uint32_t{1} << (digit - 1);
    if (!(state.candidates[cell] & bit)) return false;
    state.candidates[cell] = bit;
    state.values[cell] = digit;
    for (int peer : layout_.peers[cell])
      if (!eliminate(state, peer, digit)) return false;
    return true;
  }

  bool eliminate(State& state, int cell, int digit) {
    const std::uint32_t bit = std::uint32_t{1} << (digit - 1);
    if (!(state.candidates[cell] & bit)) return true;
    if (state.values[cell] == digit) return false;
    state.candidates[cell] &= ~bit;
    const std::uint32_t left = state.candidates[cell];
    if (left == 0) return false;
    if (state.values[cell] == 0 && std::has_single_bit(left)) return assign(state, cell, std::countr_zero(left) + 1);
    return true;
  }

  // Places digits that have a single possible cell in some unit.
  bool hidden_singles(State& state) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& unit : layout_.units) {
        for (int digit = 1; digit <= layout_.side; ++digit) {
          const std::uint32_t bit = std::uint32_t{1} << (digit - 1);
          int where = -1;
          int count = 0;
          bool placed = false;
          for (int cell : unit) {
            if (state.values[cell] == digit) {
              placed = true;
              break;
            }
            if (state.candidates[cell] & bit) {
              ++count;
              where = cell;
            }
          }
          if (placed) continue;
          if (count == 0) return false;
          if (count == 1) {
            if (!assign(state, where, digit)) return false;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void search(State state) {
    ++report_.nodes_expanded;
    int best = -1;
    int best_count = layout_.side + 1;
    for (int cell = 0; cell < layout_.cells; ++cell) {
      if (state.values[cell] != 0) continue;
      const int count = std::popcount(state.candidates[cell]);
      if (count < best_count) {
        best = cell;
        best_count = count;
      }
    }
    if (best == -1) {
      record(state.values);
      return;
    }
    for (std::uint32_t left = state.candidates[best]; left != 0 && !done(); left &= left - 1) {
      State next = state;
      if (assign(next, best, std::countr_zero(left) + 1) && hidden_singles(next)) search(std::move(next));
    }
  }

  void backtrack(std::vector<int>& values, int from) {
    ++report_.nodes_expanded;
    int cell = from;
    while (cell < layout_.cells && values[cell] != 0) ++cell;
    if (cell == layout_.cells) {
      record(values);
      return;
    }
    for (int digit = 1; digit <= layout_.side && !done(); ++digit) {
      const auto& peers = layout_.peers[cell];
      if (std::any_of(peers.begin(), peers.end(), [&](int p) { return values[p] == digit; })) continue;
      values[cell] = digit;
      backtrack(values, cell + 1);
      values[cell] = 0;
    }
  }

  const Layout& layout_;
  const SolveOptions& options_;
  SolveReport& report_;
  std::uint32_t all_digits_;
};

}  // namespace

const char* to_string(Variant variant) {
  switch (variant) {
    case Variant::standard:
      return "standard";
    case Variant::dg:
      return "dg";
    case Variant::jg:
      return "jg";
  }
  return "standard";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "standard") return Variant::standard;
  if (name == "dg") return Variant::dg;
  if (name == "jg") return Variant::jg;
  return std::nullopt;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::none:
      return "none";
    case SolveStatus::unique:
      return "unique";
    case SolveStatus::multiple:
      return "multiple";
    case SolveStatus::undetermined:
      return "undetermined";
  }
  return "none";
}

SolveStatus SolveReport::status() const {
  if (solutions.empty()) return SolveStatus::none;
  if (solutions.size() >= 2) return SolveStatus::multiple;
  return reached_cap ? SolveStatus::undetermined : SolveStatus::unique;
}

bool satisfies_variant(const SudokuGrid& grid, Variant variant) {
  const GridFlags flags = grid_flags(grid);
  switch (variant) {
    case Variant::standard:
      return flags.valid;
    case Variant::dg:
      return flags.valid && flags.dg;
    case Variant::jg:
      return flags.valid && flags.jg;
  }
  return false;
}

void check_clues(const Puzzle& puzzle) {
  const SudokuGrid& grid = puzzle.grid;
  const int n = grid.box_size();
  const int side = grid.side();
  const int cells = side * side;
  for (int a = 0; a < cells; ++a) {
    if (grid.values()[a] == 0) continue;
    for (int b = a + 1; b < cells; ++b) {
      if (grid.values()[b] != grid.values()[a]) continue;
      if (const auto rule = shared_rule(n, a, b, puzzle.variant)) {
        throw InconsistentPuzzle("digit " + std::to_string(grid.values()[a]) + " at (" + std::to_string(a / side + 1) +
                                 "," + std::to_string(a % side + 1) + ") and (" + std::to_string(b / side + 1) + "," +
                                 std::to_string(b % side + 1) + ") violates the " + rule_name(*rule) + " rule");
      }
    }
  }
}

SolveReport solve(const Puzzle& puzzle, SolveOptions options) {
  if (options.cap == 0) throw std::invalid_argument("solution cap must be positive");
  check_clues(puzzle);
  const Layout layout = make_layout(puzzle.grid.box_size(), puzzle.variant);
  SolveReport report;
  Search search(layout, options, report);
  if (options.propagate) {
    search.solve_propagating(puzzle.grid);
  } else {
    search.solve_plain(puzzle.grid);
  }
  for (const SudokuGrid& solution : report.solutions)
    if (!satisfies_variant(solution, puzzle.variant)) throw std::logic_error("solver produced an invalid grid");
  std::sort(report.solutions.begin(), report.solutions.end());
  return report;
}

bool has_unique_solution(const Puzzle& puzzle) { return solve(puzzle, {2, true}).status() == SolveStatus::unique; }

std::vector<SudokuGrid> all_complete_grids(int box_size, Variant variant) {
  return solve({SudokuGrid(box_size), variant}, {kNoCap, true}).solutions;
}

namespace {

// Calls visit(mask) for every subset of `size` elements out of `count`, in
// increasing numeric order of the bit mask, until visit returns false.
bool for_each_subset(int count, int size, const std::function<bool(std::uint32_t)>& visit) {
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << count); ++mask)
    if (std::popcount(mask) == size && !visit(mask)) return false;
  return true;
}

SudokuGrid keep_cells(const SudokuGrid& grid, std::uint32_t mask) {
  std::vector<int> values(grid.values().begin(), grid.values().end());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!(mask >> i & 1U)) values[i] = 0;
  return SudokuGrid(grid.box_size(), std::move(values));
}

}  // namespace

ClueBounds n2_clue_bounds() {
  const auto grids = all_complete_grids(2);
  const int cells = 16;
  ClueBounds bounds;
  int threshold = cells;
  for (int size = cells; size >= 0; --size) {
    bool all_unique = true;
    for (const SudokuGrid& grid : grids) {
      all_unique = for_each_subset(cells, size, [&](std::uint32_t mask) {
        ++bounds.puzzles_checked;
        return has_unique_solution({keep_cells(grid, mask), Variant::standard});
      });
      if (!all_unique) break;
    }
    if (!all_unique) break;
    threshold = size;
  }
  bounds.guarantee_threshold = threshold;

  // Witness: first subset (of the first grid that has one) with exactly two solutions.
  bool found = false;
  for (const SudokuGrid& grid : grids) {
    for_each_subset(cells, threshold - 1, [&](std::uint32_t mask) {
      Puzzle puzzle{keep_cells(grid, mask), Variant::standard};
      const SolveReport report = solve(puzzle, {3, true});
      if (report.solutions.size() == 2) {
        bounds.witness_puzzle = std::move(puzzle);
        found = true;
        return false;
      }
      return true;
    });
    if (found) break;
  }
  return bounds;
}

JgMinimum jg_min_clues_n2() {
  const auto jg_grids = all_complete_grids(2, Variant::jg);
  const SudokuGrid& grid = jg_grids.front();
  const int cells = 16;
  JgMinimum result{cells, {grid, Variant::jg}};
  for (int size = 0; size <= cells; ++size) {
    const bool exhausted = for_each_subset(cells, size, [&](std::uint32_t mask) {
      Puzzle puzzle{keep_cells(grid, mask), Variant::jg};
      if (has_unique_solution(puzzle)) {
        result = {size, std::move(puzzle)};
        return false;
      }
      return true;
    });
    if (!exhausted) break;
  }
  return result;
}

}  // namespace smsudoku
