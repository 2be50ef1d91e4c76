#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace novikov {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the twelve desk-scale checks over the built-in corpus.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0x5eed);

}  // namespace novikov
