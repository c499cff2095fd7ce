#pragma once

#include <string>
#include <vector>

namespace friedrichs::selftest {

struct Check {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct Summary {
  std::vector<Check> checks;
  bool all_pass() const;
};

/// Runs the half-plane projection suite (completeness, idempotence,
/// orthogonality, conjugation, Paley-Wiener) on a seeded 20-function
/// corpus including the zero function, and the test-function restriction
/// suite (completeness and orthogonality for all four structural cases at
/// both poles, plus the collapse property with fully one-sided inputs).
Summary run(unsigned seed);

/// Fixed-width pass/fail table.
std::string table(const Summary& s);

}  // namespace friedrichs::selftest
