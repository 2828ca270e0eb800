#pragma once

// Oracle-versus-closed-form validation suite run by `qheat validate`.

#include <string>
#include <vector>

#include "qheat/report.hpp"

namespace qheat::validation {

struct Options {
  double beta_gamma = 1e-4; ///< probe point for the closed-form validity check
  int steps = 10'000;       ///< path-integration steps per leg
  double tail_tol = 1e-20;  ///< absolute truncation tolerance of lattice sums
};

enum class Comparison { AtMost, Above };

struct Check {
  std::string name;
  double measured;
  double tolerance;
  Comparison comparison = Comparison::AtMost;
  bool passed = false;
};

std::vector<Check> run(const Options& options);

/// check, measured, comparison, tolerance, status
report::Table to_table(const std::vector<Check>& checks);

bool all_passed(const std::vector<Check>& checks) noexcept;

} // namespace qheat::validation
