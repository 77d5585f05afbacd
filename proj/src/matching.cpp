#include "smsudoku/matching.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "smsudoku/errors.hpp"

namespace smsudoku {

Matching::Matching(const PreferenceProfile& profile, std::vector<int> wife_of)
    : wife_of_(std::move(wife_of)) {
  const int n = profile.size();
  if (static_cast<int>(wife_of_.size()) != n) throw InvalidProfile("matching has the wrong size");
  husband_of_.assign(n, -1);
  for (int m = 0; m < n; ++m) {
    const int w = wife_of_[m];
    if (w < 0 || w >= n || husband_of_[w] != -1) throw InvalidProfile("matching is not a bijection");
    husband_of_[w] = m;
  }
  costs_.resize(n);
  for (int m = 0; m < n; ++m) costs_[m] = profile.pair_cost(m, wife_of_[m]);
}

int Matching::total_cost() const { return std::accumulate(costs_.begin(), costs_.end(), 0); }

std::vector<BlockingPair> blocking_pairs(const PreferenceProfile& profile, const Matching& matching) {
  const int n = profile.size();
  std::vector<BlockingPair> result;
  for (int m = 0; m < n; ++m) {
    for (int w = 0; w < n; ++w) {
      if (matching.wife_of(m) == w) continue;
      const bool man_prefers = profile.man_rank(m, w) < profile.man_rank(m, matching.wife_of(m));
      const bool woman_prefers = profile.woman_rank(w, m) < profile.woman_rank(w, matching.husband_of(w));
      if (man_prefers && woman_prefers) result.push_back({m, w});
    }
  }
  return result;
}

bool is_stable(const PreferenceProfile& profile, const Matching& matching) {
  return blocking_pairs(profile, matching).empty();
}

const char* to_string(Side side) { return side == Side::men ? "men" : "women"; }

const char* to_string(ProposerState state) {
  switch (state) {
    case ProposerState::idle:
      return "idle";
    case ProposerState::proposing:
      return "proposing";
    case ProposerState::engaged:
      return "engaged";
    case ProposerState::rejected:
      return "rejected";
  }
  return "idle";
}

int gale_shapley_round_bound(int n) { return n * n - n + 1; }

GsTrace gale_shapley(const PreferenceProfile& profile, Side proposing) {
  const int n = profile.size();
  const bool men_propose = proposing == Side::men;
  // Rank proposer p gives reviewer r, and rank reviewer r gives proposer p.
  auto proposer_rank = [&](int p, int r) {
    return men_propose ? profile.man_rank(p, r) : profile.woman_rank(p, r);
  };
  auto reviewer_rank = [&](int r, int p) {
    return men_propose ? profile.woman_rank(r, p) : profile.man_rank(r, p);
  };

  // Preference lists in order of decreasing desirability.
  std::vector<std::vector<int>> order(n, std::vector<int>(n));
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r) order[p][proposer_rank(p, r) - 1] = r;

  std::vector<int> next_choice(n, 0);
  std::vector<int> fiance_of_proposer(n, -1);
  std::vector<int> fiance_of_reviewer(n, -1);
  std::vector<GsRound> rounds;

  while (std::find(fiance_of_proposer.begin(), fiance_of_proposer.end(), -1) != fiance_of_proposer.end()) {
    GsRound round;
    round.proposal_phase.resize(n);
    round.review_phase.resize(n);
    std::vector<std::vector<int>> suitors(n);
    for (int p = 0; p < n; ++p) {
      if (fiance_of_proposer[p] != -1) {
        round.proposal_phase[p] = {ProposerState::idle, fiance_of_proposer[p]};
        continue;
      }
      const int r = order[p][next_choice[p]++];
      round.proposals.emplace_back(p, r);
      round.proposal_phase[p] = {ProposerState::proposing, r};
      suitors[r].push_back(p);
    }

    std::vector<int> rejected_by(n, -1);
    for (int r = 0; r < n; ++r) {
      if (suitors[r].empty()) continue;
      int best = fiance_of_reviewer[r];
      for (int p : suitors[r])
        if (best == -1 || reviewer_rank(r, p) < reviewer_rank(r, best)) best = p;
      if (fiance_of_reviewer[r] != -1 && fiance_of_reviewer[r] != best) {
        rejected_by[fiance_of_reviewer[r]] = r;
        fiance_of_proposer[fiance_of_reviewer[r]] = -1;
      }
      for (int p : suitors[r])
        if (p != best) rejected_by[p] = r;
      fiance_of_reviewer[r] = best;
      fiance_of_proposer[best] = r;
    }

    for (int p = 0; p < n; ++p) {
      round.review_phase[p] = fiance_of_proposer[p] != -1
                                  ? ProposerStatus{ProposerState::engaged, fiance_of_proposer[p]}
                                  : ProposerStatus{ProposerState::rejected, rejected_by[p]};
    }
    rounds.push_back(std::move(round));
  }

  std::vector<int> wife_of(n);
  for (int p = 0; p < n; ++p) {
    if (men_propose) {
      wife_of[p] = fiance_of_proposer[p];
    } else {
      wife_of[fiance_of_proposer[p]] = p;
    }
  }
  return GsTrace{proposing, std::move(rounds), Matching(profile, std::move(wife_of))};
}

std::string render_trace(const GsTrace& trace) {
  const bool men_propose = trace.proposing == Side::men;
  std::ostringstream out;
  for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
    const GsRound& round = trace.rounds[k];
    out << "round " << k + 1 << ": proposals";
    for (const auto& [p, r] : round.proposals) out << ' ' << p + 1 << "->" << r + 1;
    if (round.proposals.empty()) out << " -";

    out << "; engaged";
    std::vector<std::pair<int, int>> couples;
    std::vector<int> rejected;
    for (std::size_t p = 0; p < round.review_phase.size(); ++p) {
      const ProposerStatus& status = round.review_phase[p];
      const int proposer = static_cast<int>(p);
      if (status.state == ProposerState::engaged) {
        couples.emplace_back(men_propose ? proposer : status.target, men_propose ? status.target : proposer);
      } else {
        rejected.push_back(proposer);
      }
    }
    std::sort(couples.begin(), couples.end());
    for (const auto& [m, w] : couples) out << " (" << m + 1 << ',' << w + 1 << ')';
    if (couples.empty()) out << " -";

    out << "; rejected";
    for (int p : rejected) out << ' ' << p + 1;
    if (rejected.empty()) out << " -";
    out << '\n';
  }
  return out.str();
}

std::vector<Matching> enumerate_stable_matchings(const PreferenceProfile& profile) {
  std::vector<Matching> result;
  for_each_stable_pairing(profile, [&](const std::vector<int>& wife_of) { result.emplace_back(profile, wife_of); });
  return result;
}

std::int64_t count_stable_matchings(const PreferenceProfile& profile) {
  std::int64_t count = 0;
  for_each_stable_pairing(profile, [&](const std::vector<int>&) { ++count; });
  return count;
}

Matching egalitarian_matching(const PreferenceProfile& profile) {
  std::vector<int> best;
  int best_cost = 0;
  for_each_stable_pairing(profile, [&](const std::vector<int>& wife_of) {
    int cost = 0;
    for (int m = 0; m < profile.size(); ++m) cost += profile.pair_cost(m, wife_of[m]);
    if (best.empty() || cost < best_cost) {
      best = wife_of;
      best_cost = cost;
    }
  });
  // Stable matchings always exist, so best is set.
  return Matching(profile, std::move(best));
}

std::optional<UniformMatching> uniform_matching(const PreferenceProfile& profile, MutualRanking ranking) {
  const auto key = extract_key(profile);
  if (!key) throw InvalidProfile("uniform matchings are defined for joint profiles only");
  const int n = profile.size();
  if (ranking.by_woman < 1 || ranking.by_woman > n || (*key)(ranking.by_woman) != ranking.by_man) {
    return std::nullopt;
  }
  std::vector<int> wife_of(n, -1);
  for (int m = 0; m < n; ++m)
    for (int w = 0; w < n; ++w)
      if (profile.woman_rank(w, m) == ranking.by_woman) wife_of[m] = w;

  bool stable = true;
  for (int k = 1; k < ranking.by_woman; ++k)
    if ((*key)(k) < ranking.by_man) stable = false;
  return UniformMatching{Matching(profile, std::move(wife_of)), stable};
}

SquareMatrix<std::uint8_t> valid_partners(const PreferenceProfile& profile) {
  SquareMatrix<std::uint8_t> table(profile.size(), 0);
  for_each_stable_pairing(profile, [&](const std::vector<int>& wife_of) {
    for (int m = 0; m < profile.size(); ++m) table(m, wife_of[m]) = 1;
  });
  return table;
}

bool has_hell_couple(const PreferenceProfile& profile, const Matching& matching) {
  const int n = profile.size();
  for (int m = 0; m < n; ++m) {
    const int w = matching.wife_of(m);
    if (profile.man_rank(m, w) == n && profile.woman_rank(w, m) == n) return true;
  }
  return false;
}

}  // namespace smsudoku
