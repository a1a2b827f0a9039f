#include "wehrl/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "wehrl/closed_forms.hpp"
#include "wehrl/nelder_mead.hpp"
#include "wehrl/parallel.hpp"

namespace wehrl {
namespace {

using Rational = boost::multiprecision::cpp_rational;

double lieb_bound(HalfInt j) { return j.twice() / (j.twice() + 1.0); }

double generalized_bound(HalfInt j, double p) { return (j.twice() + 1.0) / (p * j.twice() + 1.0); }

void require_generalized_exponent(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorCode::BadExponent, "generalized margin needs p >= 1");
}

Rational harmonic_tail(int from_exclusive, int to_inclusive) {
  Rational s = 0;
  for (int r = from_exclusive + 1; r <= to_inclusive; ++r) s += Rational(1, r);
  return s;
}

struct Margin {
  std::optional<double> p;
  double value;
};

std::vector<Margin> state_margins(const SpinState& u, const std::vector<double>& p_list, bool include_entropy,
                                  const SphereGrid& grid) {
  const HusimiField field(u, Weight::Plus, grid);
  std::vector<Margin> out;
  out.reserve(p_list.size() + 1);
  if (include_entropy) out.push_back({std::nullopt, field.entropy() - lieb_bound(u.j())});
  for (double p : p_list) out.push_back({p, generalized_bound(u.j(), p) - field.moment(p)});
  return out;
}

struct SampleOutcome {
  double min_margin = std::numeric_limits<double>::infinity();
  std::vector<Violation> violations;
};

std::vector<double> to_params(const SpinState& u) {
  std::vector<double> x;
  x.reserve(2 * static_cast<std::size_t>(u.dim()));
  for (const auto& c : u.amplitudes()) {
    x.push_back(c.real());
    x.push_back(c.imag());
  }
  return x;
}

std::vector<cplx> from_params(std::span<const double> x) {
  std::vector<cplx> amps(x.size() / 2);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = {x[2 * i], x[2 * i + 1]};
  return amps;
}

}  // namespace

double lieb_margin(const SpinState& u, const SphereGrid& grid) {
  return classical_entropy_direct(u, Weight::Plus, grid) - lieb_bound(u.j());
}

double generalized_margin(const SpinState& u, double p, const SphereGrid& grid) {
  require_generalized_exponent(p);
  return generalized_bound(u.j(), p) - HusimiField(u, Weight::Plus, grid).moment(p);
}

double harmonic_margin(int k, int j) {
  if (k < 0 || j < 0) throw Error(ErrorCode::DomainError, "harmonic margin needs k, j >= 0");
  const Rational lhs = Rational(k) * harmonic_tail(k, k + j) + Rational(j) * harmonic_tail(j, j + k);
  return lhs.convert_to<double>() - log_binomial(k + j, k);
}

double beta_margin(double a, double b, double p) {
  if (!(a >= 0.0 && b >= 0.0)) throw Error(ErrorCode::DomainError, "beta margin needs a, b >= 0");
  if (!(p >= 1.0)) throw Error(ErrorCode::DomainError, "beta margin needs p >= 1");
  const double rhs = std::log(a + b + 1.0) + log_beta(a + 1.0, b + 1.0);
  const double lhs = std::log((a + b) * p + 1.0) + log_beta(a * p + 1.0, b * p + 1.0);
  return p * rhs - lhs;
}

double jensen_identity_check(double b) {
  if (!(b >= 0.0)) throw Error(ErrorCode::DomainError, "Jensen identity needs b >= 0");
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double half = integrator.integrate([b](double phi) { return std::pow(std::cos(phi), 2.0 * b); }, 0.0,
                                           0.5 * std::numbers::pi, 1e-15);
  const double lhs = std::exp(2.0 * b * std::log(2.0)) * 2.0 * half / std::numbers::pi;
  const double rhs = std::exp(-std::log(2.0 * b + 1.0) - log_beta(b + 1.0, b + 1.0));
  return std::abs(lhs - rhs);
}

double coherence_witness(const SpinState& u, const SphereGrid& grid) {
  const SpinState unit = normalize(u);
  const HusimiField field(unit, Weight::Plus, grid);
  int best_i = 0;
  int best_k = 0;
  double best = -1.0;
  for (int i = 0; i < field.n_theta(); ++i) {
    for (int k = 0; k < field.n_phi(); ++k) {
      if (field.at(i, k) > best) {
        best = field.at(i, k);
        best_i = i;
        best_k = k;
      }
    }
  }
  NelderMeadOptions options;
  options.initial_step = std::numbers::pi / std::max(field.n_theta(), 4);
  options.f_tol = 1e-15;
  options.x_tol = 1e-10;
  options.max_evaluations = 4000;
  const std::vector<double> start{std::acos(grid.x_nodes[static_cast<std::size_t>(best_i)]), grid.phi_node(best_k)};
  const auto ascent = nelder_mead(
      [&unit](std::span<const double> x) { return -husimi_q(unit, x[0], x[1], Weight::Plus); }, start, options);
  return std::max(best, -ascent.value);
}

ScanReport scan_lieb(HalfInt j, long count, std::uint64_t seed, std::vector<double> p_list, const SphereGrid& grid,
                     const ScanOptions& options) {
  require_spin(j);
  if (count < 0) throw Error(ErrorCode::DomainError, "sample count must be >= 0");
  for (double p : p_list) require_generalized_exponent(p);
  for (const auto& s : options.injected) {
    if (s.j() != j) throw Error(ErrorCode::SpinMismatch, "injected state has a different spin");
  }
  const std::size_t n_injected = options.injected.size();
  const std::size_t total = n_injected + static_cast<std::size_t>(count);
  if (total == 0) throw Error(ErrorCode::DomainError, "scan needs at least one state");

  auto sample = [&](std::size_t i) {
    return i < n_injected ? normalize(options.injected[i]) : random_haar_state(j, derive_seed(seed, i - n_injected));
  };
  const SphereGrid fine = gauss_legendre_grid(2 * grid.n_theta(), 2 * grid.n_phi);

  std::vector<SampleOutcome> outcomes(total);
  parallel_for(total, options.threads, [&](std::size_t i) {
    const SpinState u = sample(i);
    auto margins = state_margins(u, p_list, options.include_entropy, grid);
    const bool suspicious = std::any_of(margins.begin(), margins.end(),
                                        [&](const Margin& m) { return m.value < -options.tolerance; });
    if (suspicious) margins = state_margins(u, p_list, options.include_entropy, fine);
    SampleOutcome& out = outcomes[i];
    for (const auto& m : margins) {
      out.min_margin = std::min(out.min_margin, m.value);
      if (m.value < -options.tolerance) out.violations.push_back({u, m.p, m.value});
    }
  });

  // (margin, index) lexicographic minimum
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < total; ++i) {
    if (outcomes[i].min_margin < outcomes[argmin].min_margin) argmin = i;
  }
  ScanReport report{.j = j,
                    .p_values = std::move(p_list),
                    .sample_count = static_cast<long>(total),
                    .seed = seed,
                    .min_margin = outcomes[argmin].min_margin,
                    .argmin_state = sample(argmin),
                    .n_theta = grid.n_theta(),
                    .n_phi = grid.n_phi,
                    .violations = {}};
  for (auto& o : outcomes) {
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

BetaScanReport scan_beta(std::span<const double> a_values, std::span<const double> b_values,
                         std::span<const double> p_values, bool diagonal) {
  BetaScanReport report;
  for (double a : a_values) {
    const std::span<const double> bs = diagonal ? std::span<const double>(&a, 1) : b_values;
    for (double b : bs) {
      for (double p : p_values) report.rows.push_back({a, b, p, beta_margin(a, b, p), a == b});
    }
  }
  if (report.rows.empty()) throw Error(ErrorCode::DomainError, "beta scan needs nonempty ranges");
  report.argmin = *std::min_element(report.rows.begin(), report.rows.end(),
                                    [](const BetaScanRow& x, const BetaScanRow& y) { return x.margin < y.margin; });
  report.min_margin = report.argmin.margin;
  return report;
}

MinimizeResult minimize_entropy(HalfInt j, int restarts, std::uint64_t seed, const SphereGrid& grid) {
  require_spin(j);
  if (restarts < 1) throw Error(ErrorCode::DomainError, "restarts must be >= 1");

  auto objective = [&](std::span<const double> x) {
    const SpinState u(j, from_params(x));
    if (!(u.norm() > 1e-150)) return 1e3;
    return HusimiField(u, Weight::Plus, grid).entropy();
  };

  std::vector<double> best_x;
  double best_value = std::numeric_limits<double>::infinity();
  long evaluations = 0;
  bool converged = false;
  for (int r = 0; r < restarts; ++r) {
    NelderMeadOptions options;
    options.initial_step = 0.3;
    options.f_tol = 1e-13;
    options.x_tol = 1e-8;
    options.max_evaluations = 40000;
    auto run = nelder_mead(objective, to_params(random_haar_state(j, derive_seed(seed, static_cast<std::uint64_t>(r)))),
                           options);
    evaluations += run.evaluations;
    // restart around the incumbent until the simplex stops finding descent
    for (int polish = 0; polish < 6; ++polish) {
      options.initial_step = 0.05;
      auto next = nelder_mead(objective, run.x, options);
      evaluations += next.evaluations;
      const bool improved = next.value < run.value - 1e-14;
      if (next.value <= run.value) run = std::move(next);
      if (!improved) break;
    }
    if (run.value < best_value) {
      best_value = run.value;
      best_x = run.x;
      converged = run.converged;
    }
  }
  return MinimizeResult{.state = normalize(SpinState(j, from_params(best_x))),
                        .entropy = best_value,
                        .evaluations = evaluations,
                        .converged = converged};
}

}  // namespace wehrl
