#include "smsudoku/reference_data.hpp"

#include <cstring>
#include <string>

#include "smsudoku/errors.hpp"

namespace smsudoku::reference {

namespace {

struct Clue {
  int row;  // 1-based
  int col;  // 1-based
  int digit;
};

SudokuGrid grid_from_clues(int box_size, const std::vector<Clue>& clues) {
  SudokuGrid grid(box_size);
  for (const Clue& clue : clues) grid.set(clue.row - 1, clue.col - 1, clue.digit);
  return grid;
}

// Each entry is the digit string of one placement cell, e.g. "137".
PlacementMatrix placement_from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<std::vector<int>>> cells;
  for (const auto& row : rows) {
    auto& out = cells.emplace_back();
    for (const std::string& digits : row) {
      auto& entry = out.emplace_back();
      for (char ch : digits) entry.push_back(ch - '0');
    }
  }
  return PlacementMatrix::from_rows(cells);
}

// Cells given as picture coordinates x, y in {-1.5, -0.5, 0.5, 1.5}, doubled
// to stay integral: column = (x2 + 3) / 2, row = (3 - y2) / 2.
Template n2_template_from_points(const std::vector<std::pair<int, int>>& doubled) {
  std::vector<Cell> cells;
  for (const auto& [x2, y2] : doubled) cells.push_back({(3 - y2) / 2, (x2 + 3) / 2});
  return Template(2, std::move(cells));
}

}  // namespace

SudokuGrid grid_from_columns(int box_size, const std::vector<const char*>& columns) {
  const int side = box_size * box_size;
  if (static_cast<int>(columns.size()) != side) throw InvalidGrid("wrong number of columns");
  std::vector<int> values(static_cast<std::size_t>(side) * side);
  for (int c = 0; c < side; ++c) {
    if (static_cast<int>(std::strlen(columns[c])) != side) throw InvalidGrid("column of the wrong length");
    for (int r = 0; r < side; ++r) values[static_cast<std::size_t>(r) * side + c] = columns[c][r] - '0';
  }
  return SudokuGrid(box_size, std::move(values));
}

SudokuGrid lexicographically_first_grid() {
  return grid_from_columns(3, {"147238569", "258169347", "369457128", "471382695", "582691473", "693574281",
                               "714823956", "825916734", "936745812"});
}

SudokuGrid same_men_grid() {
  return grid_from_columns(3, {"147258369", "258369471", "369471582", "471582693", "582693714", "693714825",
                               "714825936", "825936147", "936147258"});
}

SudokuGrid disjoint_groups_grid() {
  return grid_from_columns(3, {"123456789", "456789312", "789231456", "645312978", "978645123", "312978645",
                               "897564231", "231897564", "564123897"});
}

SudokuGrid joint_not_box_cyclic_grid() {
  return grid_from_columns(3, {"186394275", "429517638", "753862941", "294175386", "537628419", "861943752",
                               "375286194", "618439527", "942751863"});
}

PlacementMatrix joint_not_box_cyclic_placement() {
  return placement_from_strings({{"123", "456", "789"}, {"789", "123", "456"}, {"456", "789", "123"}});
}

Puzzle jg_puzzle_twelve_clues() {
  return {grid_from_clues(3, {{7, 1, 3}, {9, 1, 5}, {6, 3, 3}, {4, 4, 1}, {8, 4, 6}, {7, 6, 2}, {1, 7, 7}, {6, 8, 8},
                              {9, 8, 6}, {2, 9, 4}, {5, 9, 5}, {8, 9, 9}}),
          Variant::jg};
}

Puzzle jg_puzzle_eight_clues() {
  return {grid_from_clues(3, {{2, 1, 6}, {1, 2, 9}, {3, 6, 1}, {1, 7, 5}, {2, 7, 7}, {3, 7, 8}, {3, 9, 2}, {9, 9, 3}}),
          Variant::jg};
}

SudokuGrid jg_answer_twelve_clues() {
  return grid_from_columns(3, {"169724385", "438516972", "257893641", "324185769", "576932418", "891647253",
                               "785369124", "912478536", "643251897"});
}

SudokuGrid jg_answer_eight_clues() {
  return grid_from_columns(3, {"164578239", "925316847", "783492651", "239164578", "847925316", "651783492",
                               "578239164", "316847925", "492651783"});
}

PlacementMatrix jg_answer_twelve_placement() {
  return placement_from_strings({{"137", "459", "268"}, {"268", "137", "459"}, {"459", "268", "137"}});
}

PlacementMatrix jg_answer_eight_placement() {
  return placement_from_strings({{"125", "389", "467"}, {"367", "124", "589"}, {"489", "567", "123"}});
}

SudokuGrid n2_joint_grid() { return SudokuGrid::from_rows(2, {{1, 2, 3, 4}, {4, 3, 2, 1}, {3, 4, 1, 2}, {2, 1, 4, 3}}); }

PlacementMatrix n2_joint_placement() { return placement_from_strings({{"13", "24"}, {"24", "13"}}); }

PreferenceProfile four_round_profile() {
  return make_profile({{1, 4, 3, 2}, {1, 2, 3, 4}, {1, 2, 3, 4}, {4, 1, 2, 3}},
                      {{2, 3, 4, 1}, {3, 1, 2, 4}, {4, 1, 2, 3}, {4, 1, 2, 3}});
}

std::vector<std::vector<std::pair<int, int>>> four_round_engagements() {
  return {{{0, 0}, {3, 1}}, {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}};
}

PreferenceProfile disjoint_mutually_latin_profile() {
  return make_profile({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
}

PreferenceProfile one_round_profile() { return make_profile({{1, 2}, {2, 1}}, {{2, 1}, {2, 1}}); }

PreferenceProfile four_by_four_ranking_profile() {
  // Entry (w, m) is (woman's rank of m, man's rank of w).
  const std::vector<std::vector<std::pair<int, int>>> ranking = {
      {{3, 4}, {4, 3}, {1, 2}, {2, 1}},
      {{4, 3}, {3, 4}, {2, 1}, {1, 2}},
      {{1, 2}, {2, 1}, {3, 4}, {4, 3}},
      {{2, 1}, {1, 2}, {4, 3}, {3, 4}},
  };
  std::vector<std::vector<int>> men(4, std::vector<int>(4)), women(4, std::vector<int>(4));
  for (int w = 0; w < 4; ++w) {
    for (int m = 0; m < 4; ++m) {
      women[w][m] = ranking[w][m].first;
      men[m][w] = ranking[w][m].second;
    }
  }
  return make_profile(men, women);
}

std::vector<int> four_by_four_stable_pairing() {
  // (w1, m3), (w2, m4), (w3, m2), (w4, m1) as wife_of.
  return {3, 2, 0, 1};
}

Template n2_type_a_template() { return n2_template_from_points({{-3, 3}, {-1, -1}, {1, 1}, {3, -3}}); }

std::vector<Template> n2_type_c_templates() {
  return {n2_template_from_points({{-3, 3}, {-1, -3}, {1, -1}, {3, 1}}),
          n2_template_from_points({{-3, -1}, {-1, 1}, {1, 3}, {3, -3}})};
}

std::vector<Template> n2_type_d_templates() {
  return {n2_template_from_points({{-3, 1}, {-1, -1}, {1, -3}, {3, 3}}),
          n2_template_from_points({{-3, -3}, {-1, 3}, {1, 1}, {3, -1}})};
}

}  // namespace smsudoku::reference
