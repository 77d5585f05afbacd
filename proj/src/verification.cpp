#include "smsudoku/verification.hpp"

#include <algorithm>
#include <sstream>

#include "smsudoku/analysis.hpp"
#include "smsudoku/reference_data.hpp"
#include "smsudoku/solver.hpp"

namespace smsudoku {

namespace {

template <typename T>
std::string join(const std::vector<T>& items, const char* separator = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? separator : "") << items[i];
  return out.str();
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::string placement_text(const PlacementMatrix& placement) {
  std::ostringstream out;
  out << '(';
  for (int r = 0; r < placement.size(); ++r) {
    out << (r ? ",(" : "(");
    for (int c = 0; c < placement.size(); ++c) {
      if (c) out << ',';
      for (int digit : placement(r, c)) out << digit;
    }
    out << ')';
  }
  out << ')';
  return out.str();
}

class Report {
 public:
  void add(std::string id, std::string description, const std::string& got, const std::string& expected) {
    claims_.push_back({std::move(id), std::move(description), got, expected, got == expected});
  }
  std::vector<Claim> take() { return std::move(claims_); }

 private:
  std::vector<Claim> claims_;
};

void census_claims(Report& report) {
  const CensusReport census = n2_census();
  report.add("census-total", "complete n=2 grids", std::to_string(census.total_grids), "288");
  report.add("census-classes", "n=2 grids up to relabeling", std::to_string(census.classes.size()), "12");

  std::vector<std::string> histogram;
  for (const auto& [multiset, count] : census.type_multiset_histogram)
    histogram.push_back(multiset + "x" + std::to_string(count));
  report.add("census-multisets", "type multisets of the classes", join(histogram, " "),
             "AAAAx1 AABBx4 BBBBx2 BBCDx4 CCDDx1");

  const auto& slots = census.per_type_profile_counts;
  report.add("census-slots", "profile slots per type over the classes",
             "A=" + std::to_string(slots[0]) + " B=" + std::to_string(slots[1]) + " C=" + std::to_string(slots[2]) +
                 " D=" + std::to_string(slots[3]),
             "A=12 B=24 C=6 D=6");

  std::vector<int> incidence = census.profiles_per_grid_incidence;
  std::sort(incidence.begin(), incidence.end());
  incidence.erase(std::unique(incidence.begin(), incidence.end()), incidence.end());
  report.add("census-incidence", "classes containing each profile", join(incidence), "3");

  const CensusConstraints facts = n2_census_constraints(census);
  report.add("census-facts", "equal C/D, A excludes C/D, even A count",
             bool_text(facts.equal_c_and_d) + "," + bool_text(facts.a_excludes_c_d) + "," +
                 bool_text(facts.even_a_count),
             "true,true,true");

  bool dichotomy = true;
  int jg_classes = 0;
  const CensusClass* jg_class = nullptr;
  for (const CensusClass& entry : census.classes) {
    const std::string& m = entry.type_multiset;
    const bool expect_dg = m == "AAAA" || m == "AABB" || m == "BBBB";
    const bool expect_jg = m == "CCDD";
    if (entry.flags.dg != expect_dg || entry.flags.jg != expect_jg) dichotomy = false;
    if (entry.flags.jg) {
      ++jg_classes;
      jg_class = &entry;
    }
  }
  report.add("census-dg-jg", "DG iff AAAA/AABB/BBBB, JG iff CCDD", bool_text(dichotomy), "true");
  report.add("n2-jg-count", "JG classes at n=2", std::to_string(jg_classes), "1");
  if (jg_class != nullptr) {
    report.add("n2-jg-box-cyclic", "the n=2 JG grid is box-cyclic", bool_text(jg_class->box_cyclic), "true");
    report.add("n2-jg-placement", "placement matrix of the n=2 JG grid",
               placement_text(placement_matrix(jg_class->grid)), "((13,24),(24,13))");
    std::vector<std::string> kinds;
    for (const PreferenceProfile& profile : grid_to_profiles(jg_class->grid)) {
      const FamilyFlags flags = family_flags(profile);
      kinds.push_back(flags.mirror ? "mirror" : flags.pseudo_latin ? "pseudo-Latin" : "other");
    }
    report.add("n2-jg-profiles", "digit profiles of the n=2 JG grid", join(kinds),
               "mirror,pseudo-Latin,mirror,pseudo-Latin");
  }
}

void n2_profile_claims(Report& report) {
  const auto table = n2_type_table();
  std::vector<int> profiles, matchings, costs;
  bool consistent = true;
  for (const N2TypeRow& row : table) {
    profiles.push_back(row.profiles);
    matchings.push_back(static_cast<int>(row.stable_matchings));
    costs.push_back(row.egalitarian_cost);
    consistent = consistent && row.consistent;
  }
  report.add("types-profiles", "profiles of type A,B,C,D", join(profiles), "4,8,2,2");
  report.add("types-matchings", "stable matchings per type A,B,C,D", join(matchings), "1,1,1,2");
  report.add("types-costs", "egalitarian cost per type A,B,C,D", join(costs), "6,5,4,6");
  report.add("types-consistent", "every profile of a type agrees", bool_text(consistent), "true");

  std::string labels;
  labels += to_char(classify_n2(template_to_profile(reference::n2_type_a_template())));
  for (const Template& t : reference::n2_type_c_templates()) labels += to_char(classify_n2(template_to_profile(t)));
  for (const Template& t : reference::n2_type_d_templates()) labels += to_char(classify_n2(template_to_profile(t)));
  report.add("types-pictures", "types of the drawn A, C, C, D, D examples", labels, "ACCDD");

  bool swap_keeps = true, flip_rule = true;
  for (const PreferenceProfile& profile : all_profiles(2)) {
    const N2Type type = classify_n2(profile);
    if (classify_n2(swap_genders(profile)) != type) swap_keeps = false;
    const N2Type expected = type == N2Type::C ? N2Type::D : type == N2Type::D ? N2Type::C : type;
    if (classify_n2(reflect_vertical(profile)) != expected || classify_n2(reflect_horizontal(profile)) != expected)
      flip_rule = false;
  }
  report.add("types-swap", "gender swap keeps the type", bool_text(swap_keeps), "true");
  report.add("types-reflect", "reflections keep A/B and swap C/D", bool_text(flip_rule), "true");

  report.add("templates-n2", "templates of box size 2", std::to_string(enumerate_templates(2).size()), "16");
}

void matching_claims(Report& report) {
  const GsTrace trace = gale_shapley(reference::four_round_profile(), Side::men);
  report.add("gs-rounds", "rounds of the four-round example", std::to_string(trace.rounds.size()), "4");
  std::vector<std::vector<std::pair<int, int>>> engaged;
  for (const GsRound& round : trace.rounds) {
    auto& couples = engaged.emplace_back();
    for (int m = 0; m < static_cast<int>(round.review_phase.size()); ++m)
      if (round.review_phase[m].state == ProposerState::engaged) couples.emplace_back(m, round.review_phase[m].target);
  }
  report.add("gs-engagements", "engagements after each round", bool_text(engaged == reference::four_round_engagements()),
             "true");

  const PreferenceProfile one_round = reference::one_round_profile();
  const GsTrace short_trace = gale_shapley(one_round, Side::men);
  report.add("gs-one-round", "rounds and stable matchings of the 2x2 example",
             std::to_string(short_trace.rounds.size()) + "," + std::to_string(count_stable_matchings(one_round)), "1,1");

  const PreferenceProfile latin = reference::disjoint_mutually_latin_profile();
  report.add("disjoint-latin", "stable matchings and Graeco-Latin check of the 3x3 example",
             std::to_string(count_stable_matchings(latin)) + "," + bool_text(graeco_latin_check(latin)), "2,true");
  const PreferenceProfile same_men = grid_to_profiles(reference::same_men_grid())[0];
  report.add("graeco-same-men", "Graeco-Latin check of a same-men profile", bool_text(graeco_latin_check(same_men)),
             "false");

  const PreferenceProfile ranking = reference::four_by_four_ranking_profile();
  report.add("ranking-4x4", "highlighted matching of the 4x4 ranking matrix is stable",
             bool_text(is_stable(ranking, Matching(ranking, reference::four_by_four_stable_pairing()))), "true");
}

void joint_claims(Report& report) {
  const auto rows = classify_joint_keys_n3();
  std::vector<int> counts;
  bool uniform = true;
  for (const JointKeyRow& row : rows) {
    counts.push_back(static_cast<int>(row.stable_matchings));
    uniform = uniform && row.all_uniform;
  }
  report.add("keys-n3", "stable matchings for keys 123,132,321,312,231,213", join(counts), "1,1,3,2,2,2");
  report.add("keys-n3-uniform", "every stable matching of an n=3 joint profile is uniform", bool_text(uniform), "true");

  const std::pair<Puzzle, SudokuGrid> puzzles[] = {
      {reference::jg_puzzle_twelve_clues(), reference::jg_answer_twelve_clues()},
      {reference::jg_puzzle_eight_clues(), reference::jg_answer_eight_clues()},
  };
  const char* names[] = {"jg-puzzle-12", "jg-puzzle-8"};
  for (int i = 0; i < 2; ++i) {
    const SolveReport solved = solve(puzzles[i].first);
    const bool matches = solved.status() == SolveStatus::unique && solved.solutions[0] == puzzles[i].second;
    report.add(names[i], "JG puzzle solves uniquely to the published answer",
               std::string(to_string(solved.status())) + "," + bool_text(matches), "unique,true");
  }

  const Puzzle eight = reference::jg_puzzle_eight_clues();
  bool minimal = true;
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      if (eight.grid.at(r, c) == 0) continue;
      Puzzle fewer = eight;
      fewer.grid.set(r, c, 0);
      if (solve(fewer).solutions.size() < 2) minimal = false;
    }
  }
  report.add("jg-puzzle-8-minimal", "clues of the 8-clue puzzle, and every removal leaves several solutions",
             std::to_string(eight.grid.clue_count()) + "," + bool_text(minimal), "8,true");

  report.add("placement-12", "placement matrix of the 12-clue answer",
             placement_text(placement_matrix(reference::jg_answer_twelve_clues())),
             placement_text(reference::jg_answer_twelve_placement()));
  report.add("placement-12-cyclic", "that placement matrix is cyclic",
             bool_text(is_cyclic(placement_matrix(reference::jg_answer_twelve_clues()))), "true");
  report.add("placement-8", "placement matrix of the 8-clue answer",
             placement_text(placement_matrix(reference::jg_answer_eight_clues())),
             placement_text(reference::jg_answer_eight_placement()));
  report.add("box-cyclic-8", "the 8-clue answer is box-cyclic", bool_text(is_box_cyclic(reference::jg_answer_eight_clues())),
             "true");

  const SudokuGrid other = reference::joint_not_box_cyclic_grid();
  report.add("jg-not-box-cyclic", "JG flag, box-cyclic flag, placement of the other JG grid",
             bool_text(grid_flags(other).jg) + "," + bool_text(is_box_cyclic(other)) + "," +
                 placement_text(placement_matrix(other)),
             "true,false," + placement_text(reference::joint_not_box_cyclic_placement()));
}

void exhaustive_claims(Report& report, bool full) {
  std::vector<std::int64_t> maxima;
  for (int n = 1; n <= 4; ++n) maxima.push_back(pseudo_latin_max_matchings(n));
  report.add("pseudo-latin", "most stable matchings of a pseudo-Latin profile, n=1..4", join(maxima), "1,2,3,10");
  if (full) {
    report.add("pseudo-latin-5", "most stable matchings of a pseudo-Latin profile, n=5",
               std::to_string(pseudo_latin_max_matchings(5)), "12");
  }

  const ClueBounds bounds = n2_clue_bounds();
  const SolveReport witness = solve(bounds.witness_puzzle, {kNoCap, true});
  report.add("clue-bounds-n2", "clue count that forces uniqueness at n=2; witness clues and solutions",
             std::to_string(bounds.guarantee_threshold) + "," + std::to_string(bounds.witness_puzzle.grid.clue_count()) +
                 "," + std::to_string(witness.solutions.size()),
             "13,12,2");

  const JgMinimum jg = jg_min_clues_n2();
  report.add("jg-min-clues-n2", "fewest clues of a unique n=2 JG puzzle (at least 3 by the swap argument)",
             std::to_string(jg.min_clues) + "," + bool_text(has_unique_solution(jg.witness_puzzle)), "3,true");
}

}  // namespace

std::vector<Claim> run_verification(bool full) {
  Report report;
  census_claims(report);
  n2_profile_claims(report);
  matching_claims(report);
  joint_claims(report);
  exhaustive_claims(report, full);
  return report.take();
}

std::string format_claim(const Claim& claim) {
  return "CLAIM " + claim.id + " " + claim.description + ": " + (claim.pass ? "PASS" : "FAIL") + " (got " + claim.got +
         ", expected " + claim.expected + ")";
}

}  // namespace smsudoku
