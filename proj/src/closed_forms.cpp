#include "wehrl/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "wehrl/wigner.hpp"

namespace wehrl {
namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

void require_positive_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw Error(ErrorCode::BadExponent, "exponent must be finite and > 0");
}

void require_unit_interval(double a, const char* what) {
  if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::DomainError, std::string(what) + " must lie in [0, 1]");
}

BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational exact_rational(double x) {
  int e = 0;
  const double mant = std::frexp(x, &e);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r = Rational(BigInt(scaled));
  const int shift = e - 53;
  if (shift >= 0) {
    r *= Rational(BigInt(1) << shift);
  } else {
    r /= Rational(BigInt(1) << (-shift));
  }
  return r;
}

std::vector<Rational> triple_sum_coefficients_exact(int n) {
  if (n < 1 || n > 10) throw Error(ErrorCode::DomainError, "triple sum supports 1 <= n <= 10");
  std::vector<BigInt> fact(static_cast<std::size_t>(2 * n + 1));
  for (int k = 0; k <= 2 * n; ++k) fact[static_cast<std::size_t>(k)] = big_factorial(k);
  auto F = [&fact](int k) -> const BigInt& { return fact[static_cast<std::size_t>(k)]; };

  std::vector<Rational> coeff(static_cast<std::size_t>(n + 1), Rational(0));
  for (int s = 0; s <= n / 2; ++s) {
    for (int r = 0; r <= n - 2 * s; ++r) {
      for (int t = 0; t <= n - s - r; ++t) {
        BigInt num = (BigInt(1) << (s + r)) * F(2 * n - s - r) * F(s + r) * F(n) * F(n - s - r);
        BigInt den = F(s) * F(s) * F(r) * F(n - 2 * s - r) * F(2 * n) * F(n - s - r - t) * F(t);
        Rational term(num, den);
        if (t % 2 != 0) term = -term;
        coeff[static_cast<std::size_t>(s + r + t)] += term;
      }
    }
  }
  const Rational lead(3, 2 * n + 1);
  for (auto& c : coeff) c *= lead;
  return coeff;
}

// Gauss-Legendre on [0, 1]. Panels grow geometrically from `scale`, the width
// of the peak at t = 0; the first panel uses t = s^2 to tame the t^p endpoint.
template <class F>
double integrate_unit_interval(F&& g, double scale) {
  static const SphereGrid rule = gauss_legendre_grid(64, 2);
  auto panel = [&](double lo, double hi, bool squared) {
    double total = 0.0;
    for (int i = 0; i < rule.n_theta(); ++i) {
      const double x = 0.5 * (rule.x_nodes[static_cast<std::size_t>(i)] + 1.0);
      const double w = 0.5 * rule.x_weights[static_cast<std::size_t>(i)];
      if (squared) {
        total += w * g(lo + (hi - lo) * x * x) * (hi - lo) * 2.0 * x;
      } else {
        total += w * g(lo + (hi - lo) * x) * (hi - lo);
      }
    }
    return total;
  };
  double lo = 0.0;
  double hi = std::clamp(scale, 1e-12, 1.0);
  double total = panel(lo, hi, true);
  while (hi < 1.0) {
    lo = hi;
    hi = std::min(1.0, 4.0 * hi);
    total += panel(lo, hi, false);
  }
  return total;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::DomainError, "ln_gamma needs x > 0");
  return std::lgamma(x);
}

double log_beta(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw Error(ErrorCode::DomainError, "log_beta needs a, b > 0");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

SeriesEvaluation hyp_f_series(double p, double t, const HypergeomSeriesConfig& cfg) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorCode::DomainError, "hyp_f needs p >= 0");
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::DomainError, "hyp_f needs t in [0, 1]");
  if (!(cfg.rel_tol > 0.0)) throw Error(ErrorCode::DomainError, "rel_tol must be > 0");

  const double gauss_value = std::exp(std::lgamma(1.0 + 2.0 * p) - 2.0 * std::lgamma(1.0 + p));
  // Integer degrees terminate, so the finite sum is exact even at t = 1.
  const bool terminating = p == std::floor(p) && p <= 500.0;
  if (t == 1.0 && !terminating) return {gauss_value, 0, true};

  // c_{k+1} = c_k ((k - p)/(k + 1))^2 t; every term is >= 0.
  double term = 1.0;
  double sum = 1.0;
  long nonzero = 1;
  for (long k = 0; k < cfg.max_terms; ++k) {
    const double ratio = (k - p) / (k + 1.0);
    term *= ratio * ratio * t;
    if (term == 0.0) return {sum, nonzero, false};
    sum += term;
    ++nonzero;
    const double kk = static_cast<double>(k + 1);
    if (kk > p) {
      // tail after c_k: geometric bound t/(1-t), algebraic bound (k+1)/(2p+1)
      const double tail = term * std::min(t / (1.0 - t), (kk + 1.0) / (2.0 * p + 1.0));
      if (tail <= cfg.rel_tol * sum) return {sum, nonzero, false};
    }
  }
  if (t > 1.0 - 1e-6) return {gauss_value, 0, true};
  throw Error(ErrorCode::NoConvergence, "hypergeometric series did not converge");
}

double hyp_f(double p, double t, const HypergeomSeriesConfig& cfg) { return hyp_f_series(p, t, cfg).value; }

double legendre_poly(int n, double x) {
  if (n < 0) throw Error(ErrorCode::DomainError, "Legendre degree must be >= 0");
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = x;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre_func(double p, double z) {
  if (!(z >= 1.0)) throw Error(ErrorCode::DomainError, "legendre_func needs z >= 1");
  if (!(p >= 0.0)) throw Error(ErrorCode::DomainError, "legendre_func needs p >= 0");
  return std::pow(0.5 * (1.0 + z), p) * hyp_f(p, (z - 1.0) / (z + 1.0));
}

OrbitParamA::OrbitParamA(double a) : a_(a) { require_unit_interval(a, "orbit parameter a"); }

OrbitParamA orbit_param_a(const SpinState& u) {
  if (u.j().twice() != 2) throw Error(ErrorCode::WrongSpin, "orbit parameter defined for J = 1 only");
  const SpinState unit = normalize(u);
  const cplx value = unit[1] * unit[1] - 2.0 * unit[0] * unit[2];
  return OrbitParamA(std::min(std::abs(value), 1.0));
}

SpinState stratum_representative(double a) {
  require_unit_interval(a, "a");
  return SpinState(HalfInt(2), {std::sqrt(1.0 - a), std::sqrt(a), 0.0});
}

double i_p_o0(double p) {
  require_positive_exponent(p);
  return 3.0 / (2.0 * p + 1.0);
}

double i_p_o1(double p) {
  require_positive_exponent(p);
  return 3.0 / (2.0 * p + 1.0) *
         std::exp(p * std::log(2.0) + 2.0 * std::lgamma(p + 1.0) - std::lgamma(2.0 * p + 1.0));
}

double i_p_oa_integral_rep(double p, double a) {
  require_positive_exponent(p);
  if (!(a > 0.0 && a < 1.0)) {
    throw Error(ErrorCode::DomainError, "integral representation needs 0 < a < 1; use i_p_o0 / i_p_o1");
  }
  const double exponent = -2.0 * (p + 1.0);
  const double r = (1.0 - a) / (2.0 * a);
  const double lower = integrate_unit_interval([&](double t) {
    return std::pow(r * t + 1.0, exponent) * hyp_f(p, t);
  }, 1.0 / r);
  const double upper = integrate_unit_interval([&](double t) {
    return std::pow(1.0 + t / r, exponent) * std::pow(t, p) * hyp_f(p, t);
  }, r);
  const double c_lower = std::exp((p + 1.0) * std::log(1.0 - a) - std::log(2.0 * a));
  const double c_upper = std::exp((2.0 * p + 1.0) * std::log(2.0 * a) - (p + 1.0) * std::log(1.0 - a));
  return 3.0 * (c_lower * lower + c_upper * upper);
}

double s_cl_j1(double a) {
  require_unit_interval(a, "a");
  return 2.0 / 3.0 + (a - std::log1p(a));
}

std::vector<double> i_n_oa_coefficients(int n) {
  const auto exact = triple_sum_coefficients_exact(n);
  std::vector<double> out;
  out.reserve(exact.size());
  for (const auto& c : exact) out.push_back(c.convert_to<double>());
  return out;
}

double i_n_oa_triple_sum(int n, double a) {
  require_unit_interval(a, "a");
  const auto coeff = triple_sum_coefficients_exact(n);
  const Rational x = exact_rational(a);
  Rational acc = 0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
  return acc.convert_to<double>();
}

double i_n_oa_legendre(int n, double a) {
  if (n < 1) throw Error(ErrorCode::DomainError, "degree must be >= 1");
  require_unit_interval(a, "a");
  const double lead = 3.0 / (2.0 * n + 1.0);
  if (a == 0.0) return lead;
  // q_k = a^k P_k(1/a):  (k+1) q_{k+1} = (2k+1) q_k - k a^2 q_{k-1}
  double q0 = 1.0;
  double q1 = 1.0;
  for (int k = 1; k < n; ++k) {
    const double q2 = ((2.0 * k + 1.0) * q1 - k * a * a * q0) / (k + 1.0);
    q0 = q1;
    q1 = q2;
  }
  const double norm = std::exp(n * std::log(2.0) + 2.0 * log_factorial(n) - log_factorial(2 * n));
  return lead * norm * q1;
}

double i_p_oa_hypothesis(double p, double a) {
  require_positive_exponent(p);
  require_unit_interval(a, "a");
  const double t = (1.0 - a) / (1.0 + a);
  const double norm = std::exp(p * std::log(2.0) + 2.0 * std::lgamma(p + 1.0) - std::lgamma(2.0 * p + 1.0));
  return 3.0 / (2.0 * p + 1.0) * norm * std::pow(0.5 * (1.0 + a), p) * hyp_f(p, t);
}

double s_cl_hypothesis(double a, double h) {
  if (!(h > 0.0 && h <= 0.1)) throw Error(ErrorCode::BadStep, "step must satisfy 0 < h <= 0.1");
  auto central = [a](double step) {
    return (i_p_oa_hypothesis(1.0 - step, a) - i_p_oa_hypothesis(1.0 + step, a)) / (2.0 * step);
  };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorCode::DomainError, "binomial needs 0 <= k <= n");
  k = std::min(k, n - k);
  if (n <= 120) {
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return std::log(static_cast<double>(c));
  }
  return log_factorial(n) - (log_factorial(k) + log_factorial(n - k));
}

double i_p_basis_closed(HalfInt j, HalfInt m, double p) {
  require_pair(j, m);
  require_positive_exponent(p);
  const double jj = j.value();
  const int k = (j.twice() + m.twice()) / 2;
  const int l = (j.twice() - m.twice()) / 2;
  // lgamma terms summed in a symmetric way so m <-> -m is bit-exact
  const double ga = std::lgamma(p * k + 1.0);
  const double gb = std::lgamma(p * l + 1.0);
  const double log_value = std::log(2.0 * jj + 1.0) - std::log(2.0 * p * jj + 1.0) +
                           p * log_binomial(j.twice(), k) + (std::min(ga, gb) + std::max(ga, gb)) -
                           std::lgamma(2.0 * p * jj + 1.0);
  return std::exp(log_value);
}

double s_cl_basis(HalfInt j, HalfInt m) {
  require_pair(j, m);
  const int two_j = j.twice();
  const int k = (two_j + m.twice()) / 2;
  const int l = (two_j - m.twice()) / 2;
  auto weighted_tail = [two_j](int c) {
    // c * (1/(c+1) + ... + 1/(2J))
    double s = 0.0;
    for (int r = two_j; r > c; --r) s += 1.0 / r;
    return c * s;
  };
  const double ta = weighted_tail(k);
  const double tb = weighted_tail(l);
  return (std::min(ta, tb) + std::max(ta, tb)) - log_binomial(two_j, k) + two_j / (two_j + 1.0);
}

}  // namespace wehrl
