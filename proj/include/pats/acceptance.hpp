#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pats {

enum class Scale { Micro, Small };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// End-to-end acceptance checks. Small runs them at their full sizes; micro
/// shrinks every sweep so the whole suite finishes in a few seconds.
std::vector<CriterionResult> run_acceptance(Scale scale, std::uint64_t rng_seed = 1,
                                            int threads = 0);

}  // namespace pats
