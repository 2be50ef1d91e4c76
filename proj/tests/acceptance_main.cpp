#include "novikov/acceptance.hpp"

#include <cstdio>

int main() {
  int failed = 0;
  for (const auto& r : novikov::run_acceptance()) {
    std::printf("%s %2d %-24s %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
