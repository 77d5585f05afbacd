#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "smsudoku/errors.hpp"
#include "smsudoku/reference_data.hpp"
#include "smsudoku/solver.hpp"

using namespace smsudoku;

namespace {

const std::vector<SudokuGrid>& n2_grids() {
  static const std::vector<SudokuGrid> grids = oracle::all_n2_grids();
  return grids;
}

std::vector<SudokuGrid> n2_grids_of(Variant variant) {
  std::vector<SudokuGrid> out;
  for (const SudokuGrid& g : n2_grids()) {
    if (variant == Variant::dg && !oracle::is_dg(g)) continue;
    if (variant == Variant::jg && !oracle::is_jg(g)) continue;
    out.push_back(g);
  }
  return out;
}

SudokuGrid blank_random_cells(const SudokuGrid& g, int blanks, std::mt19937_64& rng) {
  std::vector<int> cells(g.values().size());
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  SudokuGrid out = g;
  for (int i = 0; i < blanks; ++i) out.set(cells[i] / g.side(), cells[i] % g.side(), 0);
  return out;
}

SudokuGrid keep_mask(const SudokuGrid& g, unsigned mask) {
  SudokuGrid out = g;
  for (int i = 0; i < 16; ++i)
    if (!(mask >> i & 1U)) out.set(i / 4, i % 4, 0);
  return out;
}

}  // namespace

TEST(Solver, VariantNames) {
  EXPECT_EQ(parse_variant("jg"), Variant::jg);
  EXPECT_FALSE(parse_variant("killer").has_value());
  EXPECT_STREQ(to_string(Variant::dg), "dg");
  EXPECT_STREQ(to_string(SolveStatus::multiple), "multiple");
}

TEST(Solver, EmptyN2GridHas288SolutionsInOrder) {
  const SolveReport report = solve({SudokuGrid(2), Variant::standard}, {kNoCap, true});
  EXPECT_EQ(report.solutions, n2_grids());
  EXPECT_FALSE(report.reached_cap);
  EXPECT_EQ(all_complete_grids(2), n2_grids());
}

TEST(Solver, VariantGridsAtN2MatchOracle) {
  for (Variant v : {Variant::dg, Variant::jg}) {
    EXPECT_EQ(all_complete_grids(2, v), n2_grids_of(v));
    EXPECT_EQ(solve({SudokuGrid(2), v}, {kNoCap, false}).solutions, n2_grids_of(v));
  }
}

TEST(Solver, RandomN2PuzzlesMatchOracleInEveryVariant) {
  std::mt19937_64 rng(31);
  for (Variant v : {Variant::standard, Variant::dg, Variant::jg}) {
    const auto grids = n2_grids_of(v);
    for (int trial = 0; trial < 400; ++trial) {
      const SudokuGrid& g = grids[rng() % grids.size()];
      const SudokuGrid puzzle = blank_random_cells(g, 6 + static_cast<int>(rng() % 11), rng);
      const auto expected = oracle::completions(puzzle, grids);
      for (bool propagate : {true, false}) {
        const SolveReport report = solve({puzzle, v}, {kNoCap, propagate});
        ASSERT_EQ(report.solutions, expected);
      }
    }
  }
}

TEST(Solver, PropagationDoesNotChangeSolutionsAtN3) {
  std::mt19937_64 rng(41);
  const SudokuGrid sources[] = {reference::lexicographically_first_grid(), reference::disjoint_groups_grid(),
                                reference::jg_answer_twelve_clues()};
  for (const SudokuGrid& g : sources) {
    for (int trial = 0; trial < 4; ++trial) {
      const SudokuGrid puzzle = blank_random_cells(g, 45, rng);
      for (Variant v : {Variant::standard, Variant::dg, Variant::jg}) {
        if (!satisfies_variant(g, v)) continue;
        const Puzzle p{puzzle, v};
        EXPECT_EQ(solve(p, {50, true}).solutions, solve(p, {50, false}).solutions);
      }
    }
  }
  for (const Puzzle& p : {reference::jg_puzzle_twelve_clues(), reference::jg_puzzle_eight_clues()})
    EXPECT_EQ(solve(p, {kNoCap, true}).solutions, solve(p, {kNoCap, false}).solutions);
}

TEST(Solver, DisjointGroupsSolvingRecoversTheGrid) {
  std::mt19937_64 rng(51);
  for (const SudokuGrid& g : {reference::lexicographically_first_grid(), reference::same_men_grid()}) {
    ASSERT_TRUE(oracle::is_dg(g));
    for (int trial = 0; trial < 5; ++trial) {
      const SolveReport report = solve({blank_random_cells(g, 20, rng), Variant::dg}, {kNoCap, true});
      EXPECT_NE(std::find(report.solutions.begin(), report.solutions.end(), g), report.solutions.end());
      for (const SudokuGrid& s : report.solutions) EXPECT_TRUE(oracle::is_dg(s) && oracle::is_valid_complete(s));
    }
  }
}

TEST(Solver, JgPuzzlesSolveToTheirAnswers) {
  const SolveReport twelve = solve(reference::jg_puzzle_twelve_clues());
  ASSERT_EQ(twelve.status(), SolveStatus::unique);
  EXPECT_EQ(twelve.solutions[0], reference::jg_answer_twelve_clues());
  const SolveReport eight = solve(reference::jg_puzzle_eight_clues());
  ASSERT_EQ(eight.status(), SolveStatus::unique);
  EXPECT_EQ(eight.solutions[0], reference::jg_answer_eight_clues());
  EXPECT_TRUE(oracle::is_jg(eight.solutions[0]));
}

TEST(Solver, EightCluePuzzleIsMinimal) {
  const Puzzle p = reference::jg_puzzle_eight_clues();
  ASSERT_EQ(p.grid.clue_count(), 8);
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) {
      if (p.grid.at(r, c) == 0) continue;
      Puzzle fewer = p;
      fewer.grid.set(r, c, 0);
      EXPECT_FALSE(has_unique_solution(fewer));
      EXPECT_GE(solve(fewer).solutions.size(), 2u);
    }
}

TEST(Solver, TheEightCluePuzzleIsNotUniqueAsStandardSudoku) {
  Puzzle p = reference::jg_puzzle_eight_clues();
  p.variant = Variant::standard;
  EXPECT_EQ(solve(p).status(), SolveStatus::multiple);
}

TEST(Solver, StatusAndCap) {
  const Puzzle empty{SudokuGrid(2), Variant::standard};
  const SolveReport one = solve(empty, {1, true});
  EXPECT_EQ(one.solutions.size(), 1u);
  EXPECT_TRUE(one.reached_cap);
  EXPECT_EQ(one.status(), SolveStatus::undetermined);
  EXPECT_EQ(solve(empty).status(), SolveStatus::multiple);
  EXPECT_THROW(solve(empty, {0, true}), std::invalid_argument);

  EXPECT_TRUE(has_unique_solution({reference::disjoint_groups_grid(), Variant::standard}));
}

TEST(Solver, NoSolutionStatus) {
  // Row 1 needs a 4 in column 3 or 4; both columns already hold one.
  const Puzzle p{SudokuGrid::from_rows(2, {{1, 2, 0, 0}, {0, 0, 0, 4}, {0, 0, 0, 0}, {0, 0, 4, 0}}),
                 Variant::standard};
  ASSERT_TRUE(oracle::completions(p.grid, n2_grids()).empty());
  EXPECT_EQ(solve(p).status(), SolveStatus::none);
  EXPECT_EQ(solve(p, {2, false}).status(), SolveStatus::none);
}

TEST(Solver, InconsistentCluesNameTheRuleAndCells) {
  const auto message = [](const Puzzle& p) {
    try {
      check_clues(p);
    } catch (const InconsistentPuzzle& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  SudokuGrid g(2);
  g.set(0, 0, 1);
  g.set(0, 3, 1);
  EXPECT_EQ(message({g, Variant::standard}), "digit 1 at (1,1) and (1,4) violates the row rule");
  EXPECT_THROW(solve({g, Variant::standard}), InconsistentPuzzle);

  SudokuGrid dg(2);
  dg.set(0, 0, 2);
  dg.set(2, 2, 2);
  EXPECT_EQ(message({dg, Variant::standard}), "");
  EXPECT_NE(message({dg, Variant::dg}).find("disjoint group"), std::string::npos);

  SudokuGrid jg(2);
  jg.set(0, 0, 3);
  jg.set(2, 3, 3);
  EXPECT_EQ(message({jg, Variant::standard}), "");
  EXPECT_NE(message({jg, Variant::jg}).find("joint-groups key"), std::string::npos);
}

TEST(Solver, RefusesHugeBoxes) { EXPECT_THROW(solve({SudokuGrid(6), Variant::standard}), TooLarge); }

TEST(ClueBounds, MatchesTheOracle) {
  const ClueBounds bounds = n2_clue_bounds();
  EXPECT_EQ(bounds.guarantee_threshold, 13);
  EXPECT_EQ(bounds.witness_puzzle.grid.clue_count(), 12);
  EXPECT_EQ(oracle::completions(bounds.witness_puzzle.grid, n2_grids()).size(), 2u);

  // Oracle: every 13-clue subset of every grid has a single completion, and
  // some 12-clue subset does not.
  bool thirteen_unique = true, twelve_ambiguous = false;
  for (const SudokuGrid& g : n2_grids())
    for (unsigned mask = 0; mask < (1U << 16); ++mask) {
      const int bits = __builtin_popcount(mask);
      if (bits == 13 && oracle::completions(keep_mask(g, mask), n2_grids()).size() != 1) thirteen_unique = false;
      if (bits == 12 && !twelve_ambiguous && oracle::completions(keep_mask(g, mask), n2_grids()).size() > 1)
        twelve_ambiguous = true;
    }
  EXPECT_TRUE(thirteen_unique);
  EXPECT_TRUE(twelve_ambiguous);
}

TEST(ClueBounds, RemovingOneWholeDigitLeavesAUniqueCompletion) {
  for (const SudokuGrid& g : n2_grids())
    for (int d = 1; d <= 4; ++d) {
      SudokuGrid puzzle = g;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          if (puzzle.at(r, c) == d) puzzle.set(r, c, 0);
      EXPECT_TRUE(has_unique_solution({puzzle, Variant::standard}));
    }
}

TEST(JgMinimum, MatchesTheOracle) {
  const JgMinimum result = jg_min_clues_n2();
  EXPECT_GE(result.min_clues, 3);
  EXPECT_EQ(result.witness_puzzle.grid.clue_count(), result.min_clues);
  const auto jg_grids = n2_grids_of(Variant::jg);
  EXPECT_EQ(oracle::completions(result.witness_puzzle.grid, jg_grids).size(), 1u);

  // Oracle: no JG puzzle with fewer clues has a single JG completion.
  for (const SudokuGrid& g : jg_grids)
    for (unsigned mask = 0; mask < (1U << 16); ++mask)
      if (__builtin_popcount(mask) < result.min_clues)
        ASSERT_NE(oracle::completions(keep_mask(g, mask), jg_grids).size(), 1u);
}
