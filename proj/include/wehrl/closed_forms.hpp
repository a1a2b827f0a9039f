#pragma once

#include <vector>

#include "wehrl/spin_core.hpp"

namespace wehrl {

// Special functions --------------------------------------------------------

double ln_gamma(double x);
double log_beta(double a, double b);

struct HypergeomSeriesConfig {
  double rel_tol = 1e-13;
  long max_terms = 1'000'000;
};

struct SeriesEvaluation {
  double value = 0.0;
  long nonzero_terms = 0;
  bool endpoint_value = false;  // true when the Gauss value at t = 1 was used
};

/// F(-p, -p; 1; t) = sum_k (p choose k)^2 t^k for p >= 0, t in [0, 1].
/// Terminates exactly for integer p; at t = 1 returns Gamma(1+2p)/Gamma(1+p)^2.
SeriesEvaluation hyp_f_series(double p, double t, const HypergeomSeriesConfig& cfg = {});
double hyp_f(double p, double t, const HypergeomSeriesConfig& cfg = {});

/// Legendre polynomial P_n(x) by the three-term recurrence.
double legendre_poly(int n, double x);

/// P_p(z) = ((1+z)/2)^p F(-p,-p;1;(z-1)/(z+1)) on the ray z >= 1.
double legendre_func(double p, double z);

// Spin-1 orbit parameter ----------------------------------------------------

/// a in [0, 1]; a = 0 on the coherent orbit, a = 1 on the orbit of v_0.
class OrbitParamA {
 public:
  explicit OrbitParamA(double a);
  double value() const { return a_; }

 private:
  double a_;
};

/// |c_0^2 - 2 c_{-1} c_{+1}| of the normalized spin-1 state.
OrbitParamA orbit_param_a(const SpinState& u);

/// sqrt(1-a) v_{-1} + sqrt(a) v_0.
SpinState stratum_representative(double a);

// Moment integrals for J = 1 -------------------------------------------------

double i_p_o0(double p);  // 3 / (2p + 1)
double i_p_o1(double p);  // 3 / (2p + 1) * 2^p Gamma(p+1)^2 / Gamma(2p+1)

/// Two one-dimensional integrals over t in [0, 1] after splitting x at
/// (1 - 3a)/(1 + a). Requires 0 < a < 1.
double i_p_oa_integral_rep(double p, double a);

/// 2/3 + a - ln(1 + a).
double s_cl_j1(double a);

/// Exact coefficients of a^k, k = 0..n, in the triple-sum expansion of
/// I_n^1(a); computed in rational arithmetic, converted once.
std::vector<double> i_n_oa_coefficients(int n);

/// Triple-sum value of I_n^1(a), 1 <= n <= 10, evaluated exactly for the
/// binary value of a and rounded once.
double i_n_oa_triple_sum(int n, double a);

/// 3/(2n+1) * 2^n (n!)^2/(2n)! * a^n P_n(1/a), with the a -> 0 limit 3/(2n+1).
double i_n_oa_legendre(int n, double a);

/// Noninteger extension through the Legendre function of degree p.
double i_p_oa_hypothesis(double p, double a);

/// -d/dp i_p_oa_hypothesis at p = 1: central difference with one
/// Richardson step (h, h/2).
double s_cl_hypothesis(double a, double h = 1e-3);

// Canonical basis states, any J ---------------------------------------------

double i_p_basis_closed(HalfInt j, HalfInt m, double p);
double s_cl_basis(HalfInt j, HalfInt m);

/// ln binom(n, k) (exact integer arithmetic while it fits).
double log_binomial(int n, int k);

}  // namespace wehrl
