#include "smsudoku/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "smsudoku/errors.hpp"

namespace smsudoku {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Splits into non-empty lines with comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string word; words >> word;) line.tokens.push_back(word);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

int parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "empty input");
  const Line& first = lines.front();
  if (first.tokens.size() != 1 || first.tokens[0].rfind("n=", 0) != 0) {
    throw ParseError(first.number, "expected header 'n=<int>'");
  }
  const int n = parse_int(first.tokens[0].substr(2), first.number);
  if (n < 1) throw ParseError(first.number, "n must be positive");
  return n;
}

void expect_keyword(const std::vector<Line>& lines, std::size_t index, const char* keyword) {
  if (index >= lines.size()) throw ParseError(lines.back().number, std::string("missing '") + keyword + "' line");
  const Line& line = lines[index];
  if (line.tokens.size() != 1 || line.tokens[0] != keyword) {
    throw ParseError(line.number, std::string("expected '") + keyword + "'");
  }
}

RankMatrix read_ranks(const std::vector<Line>& lines, std::size_t first, int n) {
  RankMatrix ranks(n);
  for (int r = 0; r < n; ++r) {
    if (first + r >= lines.size()) throw ParseError(lines.back().number, "too few rank rows");
    const Line& line = lines[first + r];
    if (static_cast<int>(line.tokens.size()) != n) {
      throw ParseError(line.number, "expected " + std::to_string(n) + " ranks");
    }
    for (int c = 0; c < n; ++c) ranks(r, c) = parse_int(line.tokens[c], line.number);
  }
  return ranks;
}

}  // namespace

PreferenceProfile parse_profile(std::string_view text) {
  const auto lines = tokenize(text);
  const int n = parse_header(lines);
  const auto women_line = static_cast<std::size_t>(n) + 2;
  expect_keyword(lines, 1, "men");
  RankMatrix men = read_ranks(lines, 2, n);
  expect_keyword(lines, women_line, "women");
  RankMatrix women = read_ranks(lines, women_line + 1, n);
  if (lines.size() > women_line + 1 + n) throw ParseError(lines[women_line + 1 + n].number, "trailing content");
  return PreferenceProfile(std::move(men), std::move(women));
}

std::string format_profile(const PreferenceProfile& profile) {
  std::ostringstream out;
  auto write_matrix = [&](const RankMatrix& ranks) {
    for (int r = 0; r < ranks.size(); ++r) {
      for (int c = 0; c < ranks.size(); ++c) out << (c ? " " : "") << ranks(r, c);
      out << '\n';
    }
  };
  out << "n=" << profile.size() << "\nmen\n";
  write_matrix(profile.men_ranks());
  out << "women\n";
  write_matrix(profile.women_ranks());
  return out.str();
}

SudokuGrid parse_grid(std::string_view text) {
  const auto lines = tokenize(text);
  const int n = parse_header(lines);
  const int side = n * n;
  if (static_cast<int>(lines.size()) - 1 != side) {
    throw ParseError(lines.back().number, "expected " + std::to_string(side) + " grid rows");
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(side) * side);
  for (int r = 0; r < side; ++r) {
    const Line& line = lines[r + 1];
    if (static_cast<int>(line.tokens.size()) != side) {
      throw ParseError(line.number, "expected " + std::to_string(side) + " cells");
    }
    for (const std::string& token : line.tokens) {
      if (token == ".") {
        values.push_back(0);
        continue;
      }
      const int v = parse_int(token, line.number);
      if (v < 1 || v > side) throw ParseError(line.number, "digit " + token + " out of range");
      values.push_back(v);
    }
  }
  return SudokuGrid(n, std::move(values));
}

std::string format_grid(const SudokuGrid& grid) {
  std::ostringstream out;
  out << "n=" << grid.box_size() << '\n';
  for (int r = 0; r < grid.side(); ++r) {
    for (int c = 0; c < grid.side(); ++c) {
      if (c) out << ' ';
      const int v = grid.at(r, c);
      if (v == 0) {
        out << '.';
      } else {
        out << v;
      }
    }
    out << '\n';
  }
  return out.str();
}

InputKind detect_input_kind(std::string_view text) {
  const auto lines = tokenize(text);
  parse_header(lines);
  if (lines.size() > 1 && lines[1].tokens.size() == 1 && lines[1].tokens[0] == "men") return InputKind::profile;
  return InputKind::grid;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace smsudoku
