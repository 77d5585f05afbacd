#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smsudoku/profile.hpp"

namespace smsudoku {

/// A perfect matching of men to women together with the egalitarian cost of
/// every couple. Indices are 0-based.
class Matching {
 public:
  // wife_of[m] is the woman matched to man m. Throws InvalidProfile unless
  // the assignment is a bijection of the right size.
  Matching(const PreferenceProfile& profile, std::vector<int> wife_of);

  int size() const { return static_cast<int>(wife_of_.size()); }
  int wife_of(int man) const { return wife_of_[man]; }
  int husband_of(int woman) const { return husband_of_[woman]; }
  const std::vector<int>& pairing() const { return wife_of_; }
  const std::vector<int>& couple_costs() const { return costs_; }
  int total_cost() const;

  // Compares pairings only; costs follow from the profile.
  bool operator==(const Matching& other) const { return wife_of_ == other.wife_of_; }
  auto operator<=>(const Matching& other) const { return wife_of_ <=> other.wife_of_; }

 private:
  std::vector<int> wife_of_;
  std::vector<int> husband_of_;
  std::vector<int> costs_;
};

struct BlockingPair {
  int man = 0;
  int woman = 0;
  auto operator<=>(const BlockingPair&) const = default;
};

// Pairs (m, w) not matched together where each strictly prefers the other to
// the assigned partner, ordered by man then woman. Empty iff stable.
std::vector<BlockingPair> blocking_pairs(const PreferenceProfile& profile, const Matching& matching);
bool is_stable(const PreferenceProfile& profile, const Matching& matching);

enum class Side { men, women };

const char* to_string(Side side);

// Status of one proposer within a round. During the proposal phase a free
// proposer is `proposing` and an engaged one sits `idle`; after the review
// phase each proposer is either `engaged` or `rejected` (turned down or
// dumped during this round).
enum class ProposerState { idle, proposing, engaged, rejected };

const char* to_string(ProposerState state);

struct ProposerStatus {
  ProposerState state = ProposerState::idle;
  int target = -1;  // proposed-to / engaged-to / rejected-by person, -1 if none
};

struct GsRound {
  std::vector<std::pair<int, int>> proposals;  // (proposer, reviewer)
  std::vector<ProposerStatus> proposal_phase;  // indexed by proposer
  std::vector<ProposerStatus> review_phase;    // indexed by proposer
};

struct GsTrace {
  Side proposing = Side::men;
  std::vector<GsRound> rounds;
  Matching matching;
};

/// Deferred acceptance with simultaneous rounds: every free proposer proposes
/// to the best reviewer not yet tried, then every reviewer keeps the best of
/// her current partner and the new suitors. Proposers act in ascending index
/// order, which only affects the order of entries in the trace.
GsTrace gale_shapley(const PreferenceProfile& profile, Side proposing);

// Upper bound on the number of rounds: n^2 - n + 1.
int gale_shapley_round_bound(int n);

// One line per round:
//   round <k>: proposals p->r ...; engaged (m,w) ...; rejected p ...
// Indices are 1-based, proposals list proposer first, couples list the man
// first, and an empty list is written as "-".
std::string render_trace(const GsTrace& trace);

inline constexpr int kMaxEnumerationSize = 8;

// Every stable matching, sorted lexicographically by pairing.
// Throws TooLarge for n > 8.
std::vector<Matching> enumerate_stable_matchings(const PreferenceProfile& profile);

// Calls visit(wife_of) for every stable pairing in lexicographic order
// without materialising Matching objects.
template <typename Visitor>
void for_each_stable_pairing(const PreferenceProfile& profile, Visitor&& visit);

// Number of stable matchings (same limits as enumeration).
std::int64_t count_stable_matchings(const PreferenceProfile& profile);

// Stable matching of least total egalitarian cost; ties go to the
// lexicographically smallest pairing.
Matching egalitarian_matching(const PreferenceProfile& profile);

struct UniformMatching {
  Matching matching;
  bool stable = false;  // decided from the key alone
};

// For a joint profile with key f, pairs everyone with mutual ranking
// (ranking.by_woman, ranking.by_man) when that ranking equals (i, f(i));
// returns nullopt otherwise. Throws InvalidProfile if the profile is not
// joint. Stability: unstable iff some (k, f(k)) has k < i and f(k) < f(i).
std::optional<UniformMatching> uniform_matching(const PreferenceProfile& profile, MutualRanking ranking);

// Entry (m, w) is 1 iff some stable matching marries m and w.
SquareMatrix<std::uint8_t> valid_partners(const PreferenceProfile& profile);

// True if matching contains a couple who rank each other last.
bool has_hell_couple(const PreferenceProfile& profile, const Matching& matching);

}  // namespace smsudoku

#include "smsudoku/detail/stable_enumeration.hpp"
