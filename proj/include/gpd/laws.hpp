#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpd {

enum class Execution { Serial, Parallel };

struct CaseResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;  // in case order

  std::size_t failures() const;
};

/// pentagon, triangle, unit, pullback, round-trip, compat, gsets, pi0,
/// additivity, canonical.
const std::vector<std::string>& suite_names();

/// Case i runs on its own generator seeded with case_seed(seed, i), so the
/// report does not depend on the execution mode. Throws Error(Malformed) for
/// an unknown suite.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t cases,
                      Execution exec = Execution::Parallel);
CaseResult run_case(const std::string& suite, std::uint64_t seed, std::size_t index);

}  // namespace gpd
