#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "smsudoku/grid.hpp"
#include "smsudoku/matching.hpp"
#include "smsudoku/profile.hpp"

namespace smsudoku {

/// The four kinds of n = 2 profile, told apart by the pair costs:
///   A: costs {2,3,3,4}, soulmates and hell-pair share nobody
///   B: costs {2,3,3,4}, soulmates and hell-pair share a person
///   C: costs {2,2,4,4}
///   D: costs {3,3,3,3}
enum class N2Type { A, B, C, D };

char to_char(N2Type type);

// Throws InvalidProfile unless n = 2.
N2Type classify_n2(const PreferenceProfile& profile);

struct N2TypeRow {
  N2Type type = N2Type::A;
  int profiles = 0;
  // Stable matching count and total cost of the egalitarian stable matching,
  // taken from the first profile of the type.
  std::int64_t stable_matchings = 0;
  int egalitarian_cost = 0;
  // Every profile of the type gave the same two numbers.
  bool consistent = true;
};

// One row per type in order A, B, C, D, over all 16 profiles.
std::array<N2TypeRow, 4> n2_type_table();

struct CensusClass {
  SudokuGrid grid;               // relabeled so the first row reads 1 2 3 4
  std::vector<N2Type> digit_types;  // type of digit d at index d-1
  std::string type_multiset;     // labels sorted, e.g. "AABB"
  GridFlags flags;
  bool box_cyclic = false;
};

struct CensusReport {
  int total_grids = 0;
  // Classes up to relabeling, sorted by the relabeled grid (row-major).
  std::vector<CensusClass> classes;
  std::map<std::string, int> type_multiset_histogram;
  // Profile slots over all classes, indexed by N2Type.
  std::array<int, 4> per_type_profile_counts{};
  // For each profile of all_profiles(2), the number of classes using it.
  std::vector<int> profiles_per_grid_incidence;
};

CensusReport n2_census();

struct CensusConstraints {
  bool equal_c_and_d = true;   // every class has as many C's as D's
  bool a_excludes_c_d = true;  // a class with an A has only A's and B's
  bool even_a_count = true;    // every class has an even number of A's
  bool all() const { return equal_c_and_d && a_excludes_c_d && even_a_count; }
};

CensusConstraints n2_census_constraints(const CensusReport& report);
bool n2_census_constraints_check();

struct JointKeyRow {
  KeyFunction key;
  std::int64_t stable_matchings = 0;
  // Shared mutual ranking of each stable matching, sorted.
  std::vector<MutualRanking> stable_rankings;
  bool all_uniform = true;
};

// The six n = 3 keys in the order 123, 132, 321, 312, 231, 213 (images
// f(1) f(2) f(3)), each checked on its canonical joint profile.
std::vector<JointKeyRow> classify_joint_keys_n3();

// Calls visit on every Latin square of order n over 1..n, in row-major
// lexicographic order, until visit returns false.
void for_each_latin_square(int n, const std::function<bool(const SquareMatrix<int>&)>& visit);
std::int64_t count_latin_squares(int n);

// Pseudo-Latin profile with the Latin square as the women's ranks; the men's
// ranks are n + 1 minus its transpose.
PreferenceProfile pseudo_latin_profile(const SquareMatrix<int>& women_ranks);

inline constexpr int kMaxPseudoLatinSize = 5;

// Largest number of stable matchings of any pseudo-Latin profile of size n.
// Throws TooLarge for n > 5.
std::int64_t pseudo_latin_max_matchings(int n);

// Disjoint and mutually Latin.
bool graeco_latin_check(const PreferenceProfile& profile);

}  // namespace smsudoku
