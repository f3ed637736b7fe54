#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "redalg/cli/config.hpp"

namespace redalg::cli {

/// 0 success or pass, 1 engine error, 2 mathematical outcome (no solution,
/// failed check, violated precondition), 3 usage, 4 solution family.
enum ExitCode : int { kOk = 0, kEngineError = 1, kMathOutcome = 2, kUsage = 3, kFamily = 4 };

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, bool>> checks;
  bool pass() const {
    for (const auto& c : checks) {
      if (!c.second) return false;
    }
    return true;
  }
};

/// Suites: projector, associativity, lemma, prop, theorem, parser.
SuiteReport run_suite(const std::string& suite, const AlgebraConfig& cfg, unsigned seed, int count);

/// Entry point of the redalg tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace redalg::cli
