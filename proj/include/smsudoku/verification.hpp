#pragma once

#include <string>
#include <vector>

namespace smsudoku {

struct Claim {
  std::string id;
  std::string description;
  std::string got;
  std::string expected;
  bool pass = false;
};

// Runs every published check. `full` adds the n = 5 pseudo-Latin scan.
std::vector<Claim> run_verification(bool full);

// CLAIM <id> <description>: PASS|FAIL (got <got>, expected <expected>)
std::string format_claim(const Claim& claim);

}  // namespace smsudoku
