#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

using smsudoku::PreferenceProfile;
using smsudoku::SudokuGrid;

std::vector<std::vector<int>> stable_pairings(const PreferenceProfile& p) {
  const int n = p.size();
  std::vector<int> wife(n);
  std::iota(wife.begin(), wife.end(), 0);
  std::vector<std::vector<int>> result;
  do {
    std::vector<int> husband(n);
    for (int m = 0; m < n; ++m) husband[wife[m]] = m;
    bool stable = true;
    for (int m = 0; m < n && stable; ++m)
      for (int w = 0; w < n && stable; ++w)
        if (p.man_rank(m, w) < p.man_rank(m, wife[m]) && p.woman_rank(w, m) < p.woman_rank(w, husband[w]))
          stable = false;
    if (stable) result.push_back(wife);
  } while (std::next_permutation(wife.begin(), wife.end()));
  return result;
}

bool is_valid_complete(const SudokuGrid& g) {
  const int n = g.box_size(), s = g.side();
  for (int i = 0; i < s; ++i) {
    std::set<int> row, col, box;
    for (int j = 0; j < s; ++j) {
      row.insert(g.at(i, j));
      col.insert(g.at(j, i));
      box.insert(g.at((i / n) * n + j / n, (i % n) * n + j % n));
    }
    if (row.size() != static_cast<std::size_t>(s) || col.size() != static_cast<std::size_t>(s) ||
        box.size() != static_cast<std::size_t>(s) || row.count(0))
      return false;
  }
  return true;
}

std::vector<SudokuGrid> all_n2_grids() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {1, 2, 3, 4};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<SudokuGrid> grids;
  for (const auto& a : perms)
    for (const auto& b : perms)
      for (const auto& c : perms)
        for (const auto& d : perms) {
          std::vector<int> values;
          for (const auto* row : {&a, &b, &c, &d}) values.insert(values.end(), row->begin(), row->end());
          SudokuGrid g(2, values);
          if (is_valid_complete(g)) grids.push_back(g);
        }
  std::sort(grids.begin(), grids.end());
  return grids;
}

bool is_dg(const SudokuGrid& g) {
  const int n = g.box_size();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::set<int> seen;
      for (int band = 0; band < n; ++band)
        for (int stack = 0; stack < n; ++stack) seen.insert(g.at(band * n + r, stack * n + c));
      if (seen.size() != static_cast<std::size_t>(n * n)) return false;
    }
  return true;
}

bool is_jg(const SudokuGrid& g) {
  const int n = g.box_size();
  for (int d = 1; d <= g.side(); ++d) {
    std::vector<std::set<int>> cols_of_row(n);
    for (int r = 0; r < g.side(); ++r)
      for (int c = 0; c < g.side(); ++c)
        if (g.at(r, c) == d) cols_of_row[r % n].insert(c % n);
    for (const auto& cols : cols_of_row)
      if (cols.size() != 1) return false;
  }
  return true;
}

std::vector<SudokuGrid> completions(const SudokuGrid& puzzle, const std::vector<SudokuGrid>& grids) {
  std::vector<SudokuGrid> out;
  for (const SudokuGrid& g : grids) {
    bool agrees = true;
    for (std::size_t i = 0; i < g.values().size() && agrees; ++i)
      if (puzzle.values()[i] != 0 && puzzle.values()[i] != g.values()[i]) agrees = false;
    if (agrees) out.push_back(g);
  }
  return out;
}

namespace {

std::int64_t count_rows(int n, const std::vector<std::vector<int>>& perms, std::vector<const std::vector<int>*>& rows) {
  if (static_cast<int>(rows.size()) == n) return 1;
  std::int64_t total = 0;
  for (const auto& p : perms) {
    bool fits = true;
    for (const auto* row : rows)
      for (int c = 0; c < n; ++c)
        if ((*row)[c] == p[c]) fits = false;
    if (!fits) continue;
    rows.push_back(&p);
    total += count_rows(n, perms, rows);
    rows.pop_back();
  }
  return total;
}

}  // namespace

std::int64_t latin_square_count(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<const std::vector<int>*> rows;
  return count_rows(n, perms, rows);
}

bool graeco_latin_superposition(const PreferenceProfile& p) {
  const int n = p.size();
  std::set<std::pair<int, int>> pairs;
  for (int w = 0; w < n; ++w)
    for (int m = 0; m < n; ++m) pairs.insert({p.woman_rank(w, m), p.man_rank(m, w)});
  auto latin = [n](auto rank) {
    for (int i = 0; i < n; ++i) {
      std::set<int> col;
      for (int j = 0; j < n; ++j) col.insert(rank(j, i));
      if (col.size() != static_cast<std::size_t>(n)) return false;
    }
    return true;
  };
  const bool men_latin = latin([&](int r, int c) { return p.man_rank(r, c); });
  const bool women_latin = latin([&](int r, int c) { return p.woman_rank(r, c); });
  return men_latin && women_latin && pairs.size() == static_cast<std::size_t>(n * n);
}

PreferenceProfile random_latin_profile(int n, std::mt19937_64& rng) {
  // Cyclic squares with shuffled rows, columns and symbols.
  auto square = [&] {
    std::vector<int> rows(n), cols(n), symbols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::iota(symbols.begin(), symbols.end(), 1);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::shuffle(symbols.begin(), symbols.end(), rng);
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) out[r][c] = symbols[(rows[r] + cols[c]) % n];
    return out;
  };
  return smsudoku::make_profile(square(), square());
}

}  // namespace oracle
