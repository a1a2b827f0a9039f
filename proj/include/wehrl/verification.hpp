#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wehrl/spin_core.hpp"

namespace wehrl {

/// One cross-check between independent routes: the largest deviation seen
/// and the bound it must stay under.
struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double contract = 0.0;
  long cases = 0;

  bool passed() const { return max_deviation < contract; }
};

/// Normalization, square integrability, both entropy routes, and the
/// cosine-power Beta identity.
std::vector<CheckResult> verify_identities(const SphereGrid& grid, std::uint64_t seed);

/// J = 1 moment formulas: triple sum, Legendre form, integral
/// representation, Legendre-function extension, and quadrature.
std::vector<CheckResult> verify_hypothesis(const SphereGrid& grid);

}  // namespace wehrl
