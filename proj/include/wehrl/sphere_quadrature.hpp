#pragma once

#include <vector>

#include "wehrl/spin_core.hpp"
#include "wehrl/wigner.hpp"

namespace wehrl {

struct MomentResult {
  double value = 0.0;
  double p = 0.0;
  int n_theta = 0;
  int n_phi = 0;
  double err_estimate = 0.0;  // |value - value on the refined grid|
};

/// |(u, U(phi, theta, 0) v_{+-J})|^2 for the state as given (not normalized).
double husimi_q(const SpinState& u, double theta, double phi, Weight weight = Weight::Plus);

/// Husimi density of normalize(u) sampled on every node of a grid.
/// Evaluating several moments of the same state reuses the samples.
class HusimiField {
 public:
  HusimiField(const SpinState& u, Weight weight, const SphereGrid& grid);

  HalfInt j() const { return j_; }
  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }

  /// Q at node (i, k): x = x_nodes[i], phi = 2 pi k / n_phi.
  double at(int i, int k) const { return q_[static_cast<std::size_t>(i * n_phi_ + k)]; }
  double max_value() const;

  /// (2J+1)/(4 pi) * sum w Q^p.
  double moment(double p) const;

  /// -(2J+1)/(4 pi) * sum w Q ln Q with 0 ln 0 = 0.
  double entropy() const;

 private:
  template <class F>
  double integrate(F&& integrand) const;

  HalfInt j_;
  int n_theta_ = 0;
  int n_phi_ = 0;
  std::vector<double> x_weights_;
  double phi_weight_ = 0.0;
  std::vector<double> q_;
};

/// Grid used for err_estimate: both sizes scaled by 3/2.
SphereGrid refined_grid(const SphereGrid& grid);

MomentResult moment_integral(const SpinState& u, double p, Weight weight, const SphereGrid& grid);

double classical_entropy_direct(const SpinState& u, Weight weight, const SphereGrid& grid);

inline constexpr double kDefaultEntropyStep = 1e-3;

/// Central difference of I_p at p = 1 with one Richardson step (h, h/2).
double classical_entropy_pderiv(const SpinState& u, Weight weight, const SphereGrid& grid,
                                double h = kDefaultEntropyStep);

/// (2J+1)/(8 pi^2) * int |(u, U(g) v)|^2 sin(theta) dtheta dphi dpsi.
/// The theta/phi rule comes from the grid; psi reuses the phi spacing.
double square_integrability_check(const SpinState& u, const SpinState& v, const SphereGrid& grid);

}  // namespace wehrl
