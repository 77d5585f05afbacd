#pragma once

// Brute-force reference implementations used to cross-check the library.
// They read only the raw rank matrices and grid cells.

#include <cstdint>
#include <random>
#include <vector>

#include "smsudoku/grid.hpp"
#include "smsudoku/profile.hpp"

namespace oracle {

// Every wife_of vector with no blocking pair, in lexicographic order.
std::vector<std::vector<int>> stable_pairings(const smsudoku::PreferenceProfile& profile);

// All complete 4 x 4 grids, built row by row from permutations and filtered.
std::vector<smsudoku::SudokuGrid> all_n2_grids();

bool is_valid_complete(const smsudoku::SudokuGrid& grid);
bool is_dg(const smsudoku::SudokuGrid& grid);
// Each digit's in-box rows map to one in-box column each.
bool is_jg(const smsudoku::SudokuGrid& grid);

// Grids among `grids` that agree with every clue of `puzzle`.
std::vector<smsudoku::SudokuGrid> completions(const smsudoku::SudokuGrid& puzzle,
                                              const std::vector<smsudoku::SudokuGrid>& grids);

// Number of n x n Latin squares, by trying every tuple of permutation rows.
std::int64_t latin_square_count(int n);

// Both rank matrices Latin and the superimposed pairs all distinct.
bool graeco_latin_superposition(const smsudoku::PreferenceProfile& profile);

smsudoku::PreferenceProfile random_latin_profile(int n, std::mt19937_64& rng);

}  // namespace oracle
