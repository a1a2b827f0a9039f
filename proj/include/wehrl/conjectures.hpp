#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wehrl/sphere_quadrature.hpp"
#include "wehrl/spin_core.hpp"

namespace wehrl {

/// Wehrl entropy minus 2J/(2J+1); nonnegative if the entropy bound holds.
double lieb_margin(const SpinState& u, const SphereGrid& grid);

/// (2J+1)/(2pJ+1) - I_p(u), p >= 1.
double generalized_margin(const SpinState& u, double p, const SphereGrid& grid);

/// k (1/(k+1) + ... + 1/(k+j)) + j (1/(j+1) + ... + 1/(j+k)) - ln binom(k+j, k).
/// Harmonic sums are exact rationals; one conversion to double.
double harmonic_margin(int k, int j);

/// p ln((a+b+1) B(a+1,b+1)) - ln(((a+b)p+1) B(ap+1,bp+1)).
double beta_margin(double a, double b, double p);

/// |2^{2b}/pi * int_{-pi/2}^{pi/2} cos^{2b} - 1/((2b+1) B(b+1,b+1))|.
double jensen_identity_check(double b);

/// max Q of normalize(u): best grid node, then a local ascent in (theta, phi).
double coherence_witness(const SpinState& u, const SphereGrid& grid);

struct Violation {
  SpinState state;
  std::optional<double> p;  // empty for the entropy margin
  double margin = 0.0;
};

struct ScanReport {
  HalfInt j;
  std::vector<double> p_values;
  long sample_count = 0;
  std::uint64_t seed = 0;
  double min_margin = 0.0;
  SpinState argmin_state;
  int n_theta = 0;
  int n_phi = 0;
  std::vector<Violation> violations;
};

inline constexpr double kViolationTolerance = 1e-6;

struct ScanOptions {
  bool include_entropy = true;          // false: generalized margins only
  double tolerance = kViolationTolerance;
  int threads = 0;                      // see resolve_thread_count
  std::vector<SpinState> injected;      // evaluated ahead of the random samples
};

/// Haar-random scan of the entropy margin and the generalized margins for
/// every p in p_list. Margins below -tolerance are recomputed on a grid with
/// doubled sizes before being recorded as violations.
ScanReport scan_lieb(HalfInt j, long count, std::uint64_t seed, std::vector<double> p_list,
                     const SphereGrid& grid, const ScanOptions& options = {});

struct BetaScanRow {
  double a = 0.0;
  double b = 0.0;
  double p = 0.0;
  double margin = 0.0;
  bool proven = false;  // a == b; otherwise conjecture data
};

struct BetaScanReport {
  std::vector<BetaScanRow> rows;
  double min_margin = 0.0;
  BetaScanRow argmin;
};

/// All (a, b, p) in the product of the given lists, or only a == b when
/// diagonal is set (then b_values is ignored).
BetaScanReport scan_beta(std::span<const double> a_values, std::span<const double> b_values,
                         std::span<const double> p_values, bool diagonal);

struct MinimizeResult {
  SpinState state;
  double entropy = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Simplex descent of the Wehrl entropy over the raw real/imaginary parts of
/// the amplitudes; one run per restart from a seeded Haar state.
MinimizeResult minimize_entropy(HalfInt j, int restarts, std::uint64_t seed, const SphereGrid& grid);

}  // namespace wehrl
