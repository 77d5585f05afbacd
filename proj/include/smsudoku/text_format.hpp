#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "smsudoku/grid.hpp"
#include "smsudoku/profile.hpp"

namespace smsudoku {

// Profile files:
//   n=<int>
//   men
//   <n lines of n ranks; row i = man i, column j = woman j>
//   women
//   <n lines of n ranks; row i = woman i, column j = man j>
// Blank lines and text after '#' are ignored.
PreferenceProfile parse_profile(std::string_view text);
std::string format_profile(const PreferenceProfile& profile);

// Grid files:
//   n=<int>
//   <n^2 lines of n^2 tokens, each a digit 1..n^2 or '.'>
// Blank lines and '#' comments are ignored. Output uses single spaces and a
// trailing newline.
SudokuGrid parse_grid(std::string_view text);
std::string format_grid(const SudokuGrid& grid);

enum class InputKind { profile, grid };

// Both formats start with "n="; profiles continue with a "men" line.
InputKind detect_input_kind(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace smsudoku
