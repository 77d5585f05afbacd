#pragma once

#include <stdexcept>
#include <string>

namespace smsudoku {

// A preference profile, key, or matching violates its structural invariants.
class InvalidProfile : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A grid, template, or base box violates Sudoku structure.
class InvalidGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input that does not follow the profile or grid file format.
class ParseError : public std::runtime_error {
 public:
  // line 0 means the problem is not tied to a line.
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Puzzle clues that already break the rules of the chosen variant.
class InconsistentPuzzle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration requested beyond the supported size.
class TooLarge : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace smsudoku
