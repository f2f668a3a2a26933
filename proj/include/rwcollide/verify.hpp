#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace rwcollide {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Names accepted by run_verify, besides "all".
const std::vector<std::string>& verify_suite_names();

/// Runs one named invariant suite (or every suite for "all"). Monte Carlo
/// checks use pinned seeds, so reports are reproducible.
std::vector<SuiteReport> run_verify(const std::string& suite, unsigned workers);

void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const SuiteReport& s);

}  // namespace rwcollide
