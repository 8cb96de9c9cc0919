#ifndef TORUSWEYL_TESTING_ACCEPTANCE_HPP
#define TORUSWEYL_TESTING_ACCEPTANCE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace torusweyl::testing {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured values vs thresholds
};

/// Runs the twelve acceptance criteria with randomized inputs drawn from
/// `seed`. Tolerances are fixed in the implementation.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// One "PASS"/"FAIL" line per criterion; returns true if all passed.
bool report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace torusweyl::testing

#endif  // TORUSWEYL_TESTING_ACCEPTANCE_HPP
