#include "smsudoku/profile.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "smsudoku/errors.hpp"

namespace smsudoku {

namespace {

bool is_permutation_of_ranks(std::span<const int> row) {
  const int n = static_cast<int>(row.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : row) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void check_rows(const RankMatrix& ranks, const char* side) {
  for (int r = 0; r < ranks.size(); ++r) {
    if (!is_permutation_of_ranks(ranks.row(r))) {
      throw InvalidProfile(std::string(side) + " row " + std::to_string(r + 1) +
                           " is not a permutation of 1..n");
    }
  }
}

std::vector<std::vector<int>> all_rank_rows(int n) {
  std::vector<int> row(n);
  std::iota(row.begin(), row.end(), 1);
  std::vector<std::vector<int>> rows;
  do {
    rows.push_back(row);
  } while (std::next_permutation(row.begin(), row.end()));
  return rows;
}

}  // namespace

PreferenceProfile::PreferenceProfile(RankMatrix men_ranks, RankMatrix women_ranks)
    : men_(std::move(men_ranks)), women_(std::move(women_ranks)) {
  if (men_.size() < 1) throw InvalidProfile("profile size must be positive");
  if (men_.size() != women_.size()) {
    throw InvalidProfile("dimension mismatch: " + std::to_string(men_.size()) + " men vs " +
                         std::to_string(women_.size()) + " women");
  }
  check_rows(men_, "men");
  check_rows(women_, "women");
}

PreferenceProfile make_profile(const std::vector<std::vector<int>>& men_ranks,
                               const std::vector<std::vector<int>>& women_ranks) {
  const auto n = men_ranks.size();
  if (women_ranks.size() != n) throw InvalidProfile("dimension mismatch between men and women");
  for (const auto& row : men_ranks)
    if (row.size() != n) throw InvalidProfile("dimension mismatch in men's ranks");
  for (const auto& row : women_ranks)
    if (row.size() != n) throw InvalidProfile("dimension mismatch in women's ranks");
  return PreferenceProfile(RankMatrix::from_rows(men_ranks), RankMatrix::from_rows(women_ranks));
}

RankingMatrix ranking_matrix(const PreferenceProfile& profile) {
  const int n = profile.size();
  RankingMatrix result(n);
  for (int w = 0; w < n; ++w)
    for (int m = 0; m < n; ++m) result(w, m) = {profile.woman_rank(w, m), profile.man_rank(m, w)};
  return result;
}

TallyMatrix tally_matrix(const PreferenceProfile& profile) {
  const int n = profile.size();
  TallyMatrix tally(n, 0);
  for (int w = 0; w < n; ++w)
    for (int m = 0; m < n; ++m) ++tally(profile.woman_rank(w, m) - 1, profile.man_rank(m, w) - 1);
  return tally;
}

KeyFunction::KeyFunction(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty() || !is_permutation_of_ranks(images_)) {
    throw InvalidProfile("key is not a bijection on 1..n");
  }
}

KeyFunction KeyFunction::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return KeyFunction(std::move(images));
}

KeyFunction KeyFunction::reversal(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = n - i;
  return KeyFunction(std::move(images));
}

int KeyFunction::inverse(int rank) const {
  const auto it = std::find(images_.begin(), images_.end(), rank);
  return static_cast<int>(it - images_.begin()) + 1;
}

bool KeyFunction::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

const char* to_string(PairRole role) {
  switch (role) {
    case PairRole::soulmates:
      return "soulmates";
    case PairRole::hell_pair:
      return "hell-pair";
    case PairRole::outcasts:
      return "outcasts";
    case PairRole::plain:
      return "plain";
  }
  return "plain";
}

bool are_outcasts(const PreferenceProfile& profile, int man, int woman) {
  const int n = profile.size();
  for (int w = 0; w < n; ++w)
    if (w != woman && profile.woman_rank(w, man) != n) return false;
  for (int m = 0; m < n; ++m)
    if (m != man && profile.man_rank(m, woman) != n) return false;
  return true;
}

std::vector<PairInfo> classify_pairs(const PreferenceProfile& profile) {
  const int n = profile.size();
  std::vector<PairInfo> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * n);
  for (int m = 0; m < n; ++m) {
    for (int w = 0; w < n; ++w) {
      PairInfo info{m, w, profile.pair_cost(m, w), PairRole::plain};
      const int by_man = profile.man_rank(m, w);
      const int by_woman = profile.woman_rank(w, m);
      if (by_man == 1 && by_woman == 1) {
        info.role = PairRole::soulmates;
      } else if (by_man == n && by_woman == n) {
        info.role = PairRole::hell_pair;
      } else if (are_outcasts(profile, m, w)) {
        info.role = PairRole::outcasts;
      }
      pairs.push_back(info);
    }
  }
  return pairs;
}

bool is_latin_square(const RankMatrix& ranks) {
  const int n = ranks.size();
  for (int r = 0; r < n; ++r)
    if (!is_permutation_of_ranks(ranks.row(r))) return false;
  const RankMatrix t = ranks.transposed();
  for (int c = 0; c < n; ++c)
    if (!is_permutation_of_ranks(t.row(c))) return false;
  return true;
}

std::optional<KeyFunction> extract_key(const PreferenceProfile& profile) {
  const int n = profile.size();
  const TallyMatrix tally = tally_matrix(profile);
  std::vector<int> images(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int count = tally(i, j);
      if (count == 0) continue;
      if (count != n || images[i] != 0) return std::nullopt;
      images[i] = j + 1;
    }
    if (images[i] == 0) return std::nullopt;
  }
  if (!is_permutation_of_ranks(images)) return std::nullopt;
  return KeyFunction(std::move(images));
}

FamilyFlags family_flags(const PreferenceProfile& profile) {
  const int n = profile.size();
  FamilyFlags flags;
  flags.mutually_latin = is_latin_square(profile.men_ranks()) && is_latin_square(profile.women_ranks());

  flags.pseudo_latin = true;
  for (int m = 0; m < n && flags.pseudo_latin; ++m)
    for (int w = 0; w < n; ++w)
      if (profile.pair_cost(m, w) != n + 1) {
        flags.pseudo_latin = false;
        break;
      }

  const TallyMatrix tally = tally_matrix(profile);
  flags.disjoint = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (tally(i, j) != 1) flags.disjoint = false;

  const auto key = extract_key(profile);
  flags.joint = key.has_value();
  flags.mirror = key && key->is_identity();
  return flags;
}

PreferenceProfile profile_from_key(const KeyFunction& key) {
  const int n = key.size();
  RankMatrix women(n), men(n);
  for (int w = 0; w < n; ++w) {
    for (int m = 0; m < n; ++m) {
      const int rank = ((m - w) % n + n) % n + 1;
      women(w, m) = rank;
      men(m, w) = key(rank);
    }
  }
  return PreferenceProfile(std::move(men), std::move(women));
}

PreferenceProfile random_profile(int n, std::mt19937_64& rng) {
  RankMatrix men(n), women(n);
  std::vector<int> row(n);
  for (RankMatrix* side : {&men, &women}) {
    for (int r = 0; r < n; ++r) {
      std::iota(row.begin(), row.end(), 1);
      std::shuffle(row.begin(), row.end(), rng);
      for (int c = 0; c < n; ++c) (*side)(r, c) = row[c];
    }
  }
  return PreferenceProfile(std::move(men), std::move(women));
}

std::vector<PreferenceProfile> all_profiles(int n) {
  const auto rows = all_rank_rows(n);
  const int k = static_cast<int>(rows.size());
  std::vector<int> choice(2 * n, 0);
  std::vector<PreferenceProfile> profiles;
  while (true) {
    RankMatrix men(n), women(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        men(r, c) = rows[choice[r]][c];
        women(r, c) = rows[choice[n + r]][c];
      }
    }
    profiles.emplace_back(std::move(men), std::move(women));
    int pos = 2 * n - 1;
    while (pos >= 0 && ++choice[pos] == k) choice[pos--] = 0;
    if (pos < 0) break;
  }
  return profiles;
}

PreferenceProfile swap_genders(const PreferenceProfile& profile) {
  return PreferenceProfile(profile.women_ranks(), profile.men_ranks());
}

PreferenceProfile reflect_vertical(const PreferenceProfile& profile) {
  const int n = profile.size();
  RankMatrix men(n), women(n);
  for (int m = 0; m < n; ++m) {
    for (int w = 0; w < n; ++w) {
      men(n - 1 - m, w) = n + 1 - profile.man_rank(m, w);
      women(w, n - 1 - m) = profile.woman_rank(w, m);
    }
  }
  return PreferenceProfile(std::move(men), std::move(women));
}

PreferenceProfile reflect_horizontal(const PreferenceProfile& profile) {
  return swap_genders(reflect_vertical(swap_genders(profile)));
}

}  // namespace smsudoku
