#pragma once

#include <compare>
#include <optional>
#include <random>
#include <vector>

#include "smsudoku/square_matrix.hpp"

namespace smsudoku {

// Ranks are 1..n. Person indices are 0-based throughout the library; the
// text formats and the CLI present them 1-based.
using RankMatrix = SquareMatrix<int>;

/// A stable marriage instance with n men and n women and strict rankings.
///
/// men_ranks(m, w) is the rank man m gives woman w; women_ranks(w, m) is the
/// rank woman w gives man m. Every row of both matrices is a permutation of
/// 1..n. Construction validates this and throws InvalidProfile otherwise.
class PreferenceProfile {
 public:
  PreferenceProfile(RankMatrix men_ranks, RankMatrix women_ranks);

  int size() const { return men_.size(); }
  int man_rank(int man, int woman) const { return men_(man, woman); }
  int woman_rank(int woman, int man) const { return women_(woman, man); }
  const RankMatrix& men_ranks() const { return men_; }
  const RankMatrix& women_ranks() const { return women_; }

  // Egalitarian cost of the pair: the two mutual ranks summed.
  int pair_cost(int man, int woman) const { return man_rank(man, woman) + woman_rank(woman, man); }

  bool operator==(const PreferenceProfile&) const = default;

 private:
  RankMatrix men_;
  RankMatrix women_;
};

PreferenceProfile make_profile(const std::vector<std::vector<int>>& men_ranks,
                               const std::vector<std::vector<int>>& women_ranks);

// Mutual ranking of one man-woman pair: (woman's rank of the man, man's rank
// of the woman).
struct MutualRanking {
  int by_woman = 0;
  int by_man = 0;
  auto operator<=>(const MutualRanking&) const = default;
};

// Entry (w, m) holds the mutual ranking of woman w and man m.
using RankingMatrix = SquareMatrix<MutualRanking>;
// Entry (i-1, j-1) counts pairs whose mutual ranking is (i, j).
using TallyMatrix = SquareMatrix<int>;

RankingMatrix ranking_matrix(const PreferenceProfile& profile);
TallyMatrix tally_matrix(const PreferenceProfile& profile);

/// Permutation f of 1..n: a man ranked i by a woman ranks her back f(i).
class KeyFunction {
 public:
  // images[i-1] = f(i). Throws InvalidProfile unless it is a bijection on 1..n.
  explicit KeyFunction(std::vector<int> images);

  static KeyFunction identity(int n);
  static KeyFunction reversal(int n);  // f(i) = n + 1 - i

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int rank) const { return images_[rank - 1]; }
  int inverse(int rank) const;
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  auto operator<=>(const KeyFunction&) const = default;

 private:
  std::vector<int> images_;
};

enum class PairRole { soulmates, hell_pair, outcasts, plain };

const char* to_string(PairRole role);

struct PairInfo {
  int man = 0;
  int woman = 0;
  int cost = 0;
  PairRole role = PairRole::plain;
};

// One entry per (man, woman), ordered by man then woman. When a pair fits
// several roles the first of soulmates, hell_pair, outcasts wins; at n = 1
// the lone pair is soulmates, hell-pair, and (vacuously) outcasts at once.
std::vector<PairInfo> classify_pairs(const PreferenceProfile& profile);

// True if every other person ranks both members of the pair last.
bool are_outcasts(const PreferenceProfile& profile, int man, int woman);

struct FamilyFlags {
  bool mutually_latin = false;
  bool pseudo_latin = false;
  bool disjoint = false;
  bool joint = false;
  bool mirror = false;
  bool operator==(const FamilyFlags&) const = default;
};

FamilyFlags family_flags(const PreferenceProfile& profile);

bool is_latin_square(const RankMatrix& ranks);

// The key of a joint profile; nullopt for any other profile.
std::optional<KeyFunction> extract_key(const PreferenceProfile& profile);

// Canonical joint profile for a key: woman w ranks man m as ((m - w) mod n) + 1
// and the men's ranks follow from the key.
PreferenceProfile profile_from_key(const KeyFunction& key);

// Uniformly random profile of size n.
PreferenceProfile random_profile(int n, std::mt19937_64& rng);

// All (n!)^(2n) profiles of size n in lexicographic order of (men, women)
// rows. Only sensible for n <= 2 (n = 3 already gives 46656).
std::vector<PreferenceProfile> all_profiles(int n);

// Symmetries of the picture of a profile in the grid.
PreferenceProfile swap_genders(const PreferenceProfile& profile);
// Mirror across the vertical axis: man x becomes man n+1-x and every man's
// ranks are reversed (in-box columns flip).
PreferenceProfile reflect_vertical(const PreferenceProfile& profile);
// Mirror across the horizontal axis: woman x becomes woman n+1-x and every
// woman's ranks are reversed (in-box rows flip).
PreferenceProfile reflect_horizontal(const PreferenceProfile& profile);

}  // namespace smsudoku
