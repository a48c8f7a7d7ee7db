#pragma once

// Self-check suites run by `dislokit validate`. Each group collects named
// residual checks against fixed tolerances.

#include <string>
#include <vector>

namespace dislokit {

struct CheckGroup {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> failed;
  double max_residual = 0.0;

  // Records one check; passes when residual <= tolerance (NaN fails).
  void check(const std::string& what, double residual, double tolerance);
};

struct ValidationReport {
  std::vector<CheckGroup> groups;

  bool ok() const noexcept;
  std::string to_json() const;
};

// Scales applied to the principal coefficients under test. Anything other
// than 1 simulates a wrong constant; the harness uses it to confirm that the
// named check catches it.
struct ValidationOptions {
  double bcc_coefficient_scale = 1.0;
  double sc_coefficient_scale = 1.0;
};

ValidationReport validate(const ValidationOptions& opts = {});

}  // namespace dislokit
