#pragma once

#include <string>
#include <vector>

namespace schubert {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// Shrinks every n range by one so the run finishes in seconds.
  bool reduced = false;
  int workers = 1;
};

inline constexpr int acceptance_count = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& opts = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

}  // namespace schubert
