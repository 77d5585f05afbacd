#include <gtest/gtest.h>

#include <random>

#include "smsudoku/errors.hpp"
#include "smsudoku/reference_data.hpp"
#include "smsudoku/text_format.hpp"

using namespace smsudoku;

TEST(TextFormat, ProfileRoundTrip) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 6; ++n) {
    const PreferenceProfile p = random_profile(n, rng);
    EXPECT_EQ(parse_profile(format_profile(p)), p);
  }
  EXPECT_EQ(format_profile(reference::one_round_profile()), "n=2\nmen\n1 2\n2 1\nwomen\n2 1\n2 1\n");
}

TEST(TextFormat, ProfileIgnoresCommentsAndBlankLines) {
  const PreferenceProfile p = parse_profile("# example\nn=2\n\nmen   # rows are men\n1 2\n2 1\n\nwomen\n2 1\n2 1\n");
  EXPECT_EQ(p, reference::one_round_profile());
}

TEST(TextFormat, ProfileErrorsCarryLineNumbers) {
  try {
    parse_profile("n=2\nmen\n1 2\n2 x\nwomen\n1 2\n1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  EXPECT_THROW(parse_profile("n=2\nwomen\n"), ParseError);
  EXPECT_THROW(parse_profile("m=2\n"), ParseError);
  EXPECT_THROW(parse_profile(""), ParseError);
  EXPECT_THROW(parse_profile("n=2\nmen\n1 2\n2 1\nwomen\n2 1\n2 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_profile("n=2\nmen\n1 1\n2 1\nwomen\n2 1\n2 1\n"), InvalidProfile);
}

TEST(TextFormat, GridRoundTrip) {
  const SudokuGrid g = reference::jg_puzzle_eight_clues().grid;
  const std::string text = format_grid(g);
  EXPECT_EQ(text.substr(0, 23), "n=3\n. 9 . . . . 5 . .\n6");
  EXPECT_EQ(parse_grid(text), g);
  const SudokuGrid full = reference::disjoint_groups_grid();
  EXPECT_EQ(parse_grid(format_grid(full)), full);
}

TEST(TextFormat, GridErrors) {
  EXPECT_THROW(parse_grid("n=2\n1 2 3 4\n"), ParseError);
  EXPECT_THROW(parse_grid("n=2\n1 2 3\n. . . .\n. . . .\n. . . .\n"), ParseError);
  try {
    parse_grid("n=2\n1 2 3 4\n. . . .\n. . 9 .\n. . . .\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(TextFormat, DetectsInputKind) {
  EXPECT_EQ(detect_input_kind(format_profile(reference::one_round_profile())), InputKind::profile);
  EXPECT_EQ(detect_input_kind(format_grid(reference::n2_joint_grid())), InputKind::grid);
  EXPECT_THROW(detect_input_kind("hello\n"), ParseError);
}

TEST(TextFormat, MissingFile) {
  try {
    read_file("/nonexistent/path.grid");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 0);
    EXPECT_EQ(std::string(e.what()).rfind("cannot open", 0), 0u);
  }
}
