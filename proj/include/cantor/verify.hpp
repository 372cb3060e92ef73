#pragma once

#include <string>
#include <vector>

#include "cantor/serialize.hpp"

namespace cantor {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what);
};

/// Known discrepancies in the construction that are reported, not failed.
struct Finding {
  std::string name;
  std::string summary;
  Json details;
};

struct VerificationReport {
  unsigned max_level;
  std::vector<SuiteResult> suites;
  std::vector<Finding> findings;

  bool passed() const;
};

/// Runs the invariant suites for cantor_geometry, pl_function and
/// oscillator up to `max_level` (1..10).
VerificationReport run_verification(unsigned max_level);

Json to_json(const VerificationReport& report);

}  // namespace cantor
