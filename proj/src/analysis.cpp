#include "smsudoku/analysis.hpp"

#include <algorithm>
#include <set>

#include "smsudoku/errors.hpp"
#include "smsudoku/solver.hpp"

namespace smsudoku {

char to_char(N2Type type) { return static_cast<char>('A' + static_cast<int>(type)); }

N2Type classify_n2(const PreferenceProfile& profile) {
  if (profile.size() != 2) throw InvalidProfile("type labels exist only for n = 2");
  std::vector<int> costs;
  for (int m = 0; m < 2; ++m)
    for (int w = 0; w < 2; ++w) costs.push_back(profile.pair_cost(m, w));
  std::sort(costs.begin(), costs.end());
  if (costs == std::vector<int>{2, 2, 4, 4}) return N2Type::C;
  if (costs == std::vector<int>{3, 3, 3, 3}) return N2Type::D;
  // Costs are 2, 3, 3, 4: the cost-2 and cost-4 pairs lie on one diagonal of
  // the 2 x 2 pair table exactly when they share nobody.
  int soul_man = 0, soul_woman = 0, hell_man = 0, hell_woman = 0;
  for (int m = 0; m < 2; ++m) {
    for (int w = 0; w < 2; ++w) {
      if (profile.pair_cost(m, w) == 2) {
        soul_man = m;
        soul_woman = w;
      } else if (profile.pair_cost(m, w) == 4) {
        hell_man = m;
        hell_woman = w;
      }
    }
  }
  return soul_man != hell_man && soul_woman != hell_woman ? N2Type::A : N2Type::B;
}

std::array<N2TypeRow, 4> n2_type_table() {
  std::array<N2TypeRow, 4> rows;
  for (int t = 0; t < 4; ++t) rows[t].type = static_cast<N2Type>(t);
  for (const PreferenceProfile& profile : all_profiles(2)) {
    N2TypeRow& row = rows[static_cast<int>(classify_n2(profile))];
    const std::int64_t count = count_stable_matchings(profile);
    const int cost = egalitarian_matching(profile).total_cost();
    if (row.profiles == 0) {
      row.stable_matchings = count;
      row.egalitarian_cost = cost;
    } else if (row.stable_matchings != count || row.egalitarian_cost != cost) {
      row.consistent = false;
    }
    ++row.profiles;
  }
  return rows;
}

CensusReport n2_census() {
  const auto grids = all_complete_grids(2);
  std::set<SudokuGrid> canonical;
  for (const SudokuGrid& grid : grids) canonical.insert(relabel_canonical(grid));

  const auto profiles = all_profiles(2);
  CensusReport report;
  report.total_grids = static_cast<int>(grids.size());
  report.profiles_per_grid_incidence.assign(profiles.size(), 0);
  for (const SudokuGrid& grid : canonical) {
    CensusClass entry{grid, {}, {}, grid_flags(grid), is_box_cyclic(grid)};
    for (const PreferenceProfile& profile : grid_to_profiles(grid)) {
      const N2Type type = classify_n2(profile);
      entry.digit_types.push_back(type);
      entry.type_multiset.push_back(to_char(type));
      ++report.per_type_profile_counts[static_cast<int>(type)];
      const auto it = std::find(profiles.begin(), profiles.end(), profile);
      ++report.profiles_per_grid_incidence[it - profiles.begin()];
    }
    std::sort(entry.type_multiset.begin(), entry.type_multiset.end());
    ++report.type_multiset_histogram[entry.type_multiset];
    report.classes.push_back(std::move(entry));
  }
  return report;
}

CensusConstraints n2_census_constraints(const CensusReport& report) {
  CensusConstraints result;
  for (const CensusClass& entry : report.classes) {
    std::array<int, 4> count{};
    for (N2Type type : entry.digit_types) ++count[static_cast<int>(type)];
    const int a = count[0], c = count[2], d = count[3];
    if (c != d) result.equal_c_and_d = false;
    if (a > 0 && c + d > 0) result.a_excludes_c_d = false;
    if (a % 2 != 0) result.even_a_count = false;
  }
  return result;
}

bool n2_census_constraints_check() { return n2_census_constraints(n2_census()).all(); }

std::vector<JointKeyRow> classify_joint_keys_n3() {
  const std::vector<std::vector<int>> keys = {{1, 2, 3}, {1, 3, 2}, {3, 2, 1}, {3, 1, 2}, {2, 3, 1}, {2, 1, 3}};
  std::vector<JointKeyRow> rows;
  for (const auto& images : keys) {
    JointKeyRow row{KeyFunction(images), 0, {}, true};
    const PreferenceProfile profile = profile_from_key(row.key);
    for (const Matching& matching : enumerate_stable_matchings(profile)) {
      ++row.stable_matchings;
      const int m0 = 0, w0 = matching.wife_of(0);
      const MutualRanking shared{profile.woman_rank(w0, m0), profile.man_rank(m0, w0)};
      for (int m = 1; m < 3; ++m) {
        const int w = matching.wife_of(m);
        if (MutualRanking{profile.woman_rank(w, m), profile.man_rank(m, w)} != shared) row.all_uniform = false;
      }
      row.stable_rankings.push_back(shared);
    }
    std::sort(row.stable_rankings.begin(), row.stable_rankings.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

bool fill_latin(SquareMatrix<int>& square, int cell, std::vector<std::uint32_t>& row_used,
                std::vector<std::uint32_t>& col_used, const std::function<bool(const SquareMatrix<int>&)>& visit) {
  const int n = square.size();
  if (cell == n * n) return visit(square);
  const int r = cell / n, c = cell % n;
  for (int v = 1; v <= n; ++v) {
    const std::uint32_t bit = std::uint32_t{1} << v;
    if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
    square(r, c) = v;
    row_used[r] |= bit;
    col_used[c] |= bit;
    const bool go_on = fill_latin(square, cell + 1, row_used, col_used, visit);
    row_used[r] &= ~bit;
    col_used[c] &= ~bit;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_latin_square(int n, const std::function<bool(const SquareMatrix<int>&)>& visit) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  SquareMatrix<int> square(n, 0);
  std::vector<std::uint32_t> row_used(n, 0), col_used(n, 0);
  fill_latin(square, 0, row_used, col_used, visit);
}

std::int64_t count_latin_squares(int n) {
  std::int64_t count = 0;
  for_each_latin_square(n, [&](const SquareMatrix<int>&) {
    ++count;
    return true;
  });
  return count;
}

PreferenceProfile pseudo_latin_profile(const SquareMatrix<int>& women_ranks) {
  const int n = women_ranks.size();
  RankMatrix men(n, 0);
  for (int m = 0; m < n; ++m)
    for (int w = 0; w < n; ++w) men(m, w) = n + 1 - women_ranks(w, m);
  return PreferenceProfile(std::move(men), women_ranks);
}

std::int64_t pseudo_latin_max_matchings(int n) {
  if (n > kMaxPseudoLatinSize) throw TooLarge("pseudo-Latin scan supports n up to " + std::to_string(kMaxPseudoLatinSize));
  std::int64_t best = 0;
  for_each_latin_square(n, [&](const SquareMatrix<int>& square) {
    best = std::max(best, count_stable_matchings(pseudo_latin_profile(square)));
    return true;
  });
  return best;
}

bool graeco_latin_check(const PreferenceProfile& profile) {
  const FamilyFlags flags = family_flags(profile);
  return flags.disjoint && flags.mutually_latin;
}

}  // namespace smsudoku
