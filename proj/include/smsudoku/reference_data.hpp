#pragma once

#include <utility>
#include <vector>

#include "smsudoku/grid.hpp"
#include "smsudoku/profile.hpp"
#include "smsudoku/solver.hpp"

// Worked instances used by the verification report and the tests.
namespace smsudoku::reference {

// Builds a grid from its columns, each written top to bottom as a digit string.
SudokuGrid grid_from_columns(int box_size, const std::vector<const char*>& columns);

// 9 x 9 grids.
SudokuGrid lexicographically_first_grid();
SudokuGrid same_men_grid();            // every digit's men share one ranking
SudokuGrid disjoint_groups_grid();     // DG grid
SudokuGrid joint_not_box_cyclic_grid();  // JG grid that is not box-cyclic
PlacementMatrix joint_not_box_cyclic_placement();

// The two JG puzzles (12 and 8 clues) and their answers.
Puzzle jg_puzzle_twelve_clues();
Puzzle jg_puzzle_eight_clues();
SudokuGrid jg_answer_twelve_clues();
SudokuGrid jg_answer_eight_clues();
PlacementMatrix jg_answer_twelve_placement();
PlacementMatrix jg_answer_eight_placement();

// The only n = 2 JG grid up to relabeling, and its placement matrix.
SudokuGrid n2_joint_grid();
PlacementMatrix n2_joint_placement();

// n = 4 profile whose simultaneous-round men-proposing run takes 4 rounds.
PreferenceProfile four_round_profile();
// Engaged couples (man, woman), 0-based, at the end of each round.
std::vector<std::vector<std::pair<int, int>>> four_round_engagements();

// n = 3 disjoint mutually Latin profile with two stable matchings.
PreferenceProfile disjoint_mutually_latin_profile();

// n = 2 profile with a single stable matching found in one round.
PreferenceProfile one_round_profile();

// n = 4 ranking matrix rows and one of its stable matchings (wife_of).
PreferenceProfile four_by_four_ranking_profile();
std::vector<int> four_by_four_stable_pairing();

// n = 2 templates drawn as type examples.
Template n2_type_a_template();
std::vector<Template> n2_type_c_templates();
std::vector<Template> n2_type_d_templates();

}  // namespace smsudoku::reference
