// One line per acceptance criterion; exit status 1 when any fails.
#include <cstring>
#include <iostream>

#include "schubert/acceptance.hpp"

int main(int argc, char** argv) {
  schubert::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--small") == 0) opts.reduced = true;
  int failed = 0;
  for (int id = 1; id <= schubert::acceptance_count; ++id) {
    auto r = schubert::run_criterion(id, opts);
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail
              << " (" << r.seconds << " s)" << std::endl;
    failed += !r.passed;
  }
  std::cout << failed << " of " << schubert::acceptance_count
            << " criteria failed" << std::endl;
  return failed ? 1 : 0;
}
