#pragma once

#include <string>
#include <vector>

#include "planebundles/reporting.hpp"

namespace pb::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  bool quick = false;
  std::uint64_t seed = 0;
  std::string corrupt;  // self-test hook: name of a check whose expected
                        // values get perturbed, forcing a named failure
};

/// The full verification suite; every check is deterministic given the seed.
std::vector<CheckResult> run(const Options& opt);

/// JSON (deterministic: timings are text-only) or text (with timings).
std::string render(const std::vector<CheckResult>& results, const Options& opt,
                   const std::string& format);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pb::verify
