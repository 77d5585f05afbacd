#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "smsudoku/errors.hpp"

namespace smsudoku {

namespace detail {

// Stability of a pairing given as wife_of with precomputed inverse.
inline bool pairing_is_stable(const PreferenceProfile& profile, const std::vector<int>& wife_of,
                              const std::vector<int>& husband_of) {
  const int n = profile.size();
  for (int m = 0; m < n; ++m) {
    const int current = profile.man_rank(m, wife_of[m]);
    for (int w = 0; w < n; ++w) {
      if (profile.man_rank(m, w) >= current) continue;
      if (profile.woman_rank(w, m) < profile.woman_rank(w, husband_of[w])) return false;
    }
  }
  return true;
}

}  // namespace detail

template <typename Visitor>
void for_each_stable_pairing(const PreferenceProfile& profile, Visitor&& visit) {
  const int n = profile.size();
  if (n > kMaxEnumerationSize) {
    throw TooLarge("exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerationSize) +
                   ", got " + std::to_string(n));
  }
  std::vector<int> wife_of(n);
  std::iota(wife_of.begin(), wife_of.end(), 0);
  std::vector<int> husband_of(n);
  do {
    for (int m = 0; m < n; ++m) husband_of[wife_of[m]] = m;
    if (detail::pairing_is_stable(profile, wife_of, husband_of)) visit(wife_of);
  } while (std::next_permutation(wife_of.begin(), wife_of.end()));
}

}  // namespace smsudoku
