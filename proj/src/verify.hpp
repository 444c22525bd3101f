#pragma once

#include <string>
#include <vector>

#include "catalog.hpp"

namespace gcob {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  bool diagnostic = false;  // reported, never failing
  std::string detail;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  int threads = 1;
  bool diagnostics = false;
};

// Cross-module property suites. Everything here checks one route of a
// computation against an independent one; diagnostics only interpret the
// unresolved annotations in the reference data.
std::vector<CheckResult> run_verify(const Catalog& cat,
                                    const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gcob
