#pragma once

#include <vector>

#include "wehrl/spin_core.hpp"

namespace wehrl {

/// Largest supported 2J for rotation matrices (J = 25/2).
inline constexpr int kMaxTwiceSpin = 25;

/// ln(n!) for n >= 0, tabulated up to 170 and via log-gamma beyond.
double log_factorial(int n);

/// Real Wigner small-d element d^J_{mn}(theta) in the Condon-Shortley
/// convention. Its modulus coincides with |P^J_{mn}(cos theta)|.
double wigner_d(HalfInt j, HalfInt m, HalfInt n, double theta);

/// Full (2J+1)x(2J+1) matrix, row-major, rows indexed by m and columns by n.
std::vector<double> wigner_d_matrix(HalfInt j, double theta);

/// Column n of d^J(theta): d^J_{mn}(theta) for m = -J..J.
std::vector<double> wigner_d_column(HalfInt j, HalfInt n, double theta);

/// (v_m, U(g) v_n) = exp(-i(m phi + n psi)) d^J_{mn}(theta).
cplx rotation_element(HalfInt j, HalfInt m, HalfInt n, const EulerAngles& g);

SpinState apply_rotation(const EulerAngles& g, const SpinState& u);

/// U(g)^dagger u.
SpinState apply_inverse_rotation(const EulerAngles& g, const SpinState& u);

/// Selects the extremal weight vector v_{+J} or v_{-J}.
enum class Weight { Plus, Minus };

inline HalfInt weight_label(HalfInt j, Weight w) { return w == Weight::Plus ? j : -j; }

/// (u, U(g) v_{+-J}).
cplx coherent_overlap(const SpinState& u, const EulerAngles& g, Weight weight);

}  // namespace wehrl
