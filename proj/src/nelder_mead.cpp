#include "wehrl/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wehrl {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  const double dn = static_cast<double>(n);
  // Gao & Han adaptive parameters; reduce to the classic ones for n = 2.
  const double alpha = 1.0;
  const bool adaptive = n >= 2;
  const double beta = adaptive ? 1.0 + 2.0 / dn : 2.0;
  const double gamma = adaptive ? 0.75 - 0.5 / dn : 0.5;
  const double delta = adaptive ? 1.0 - 1.0 / dn : 0.5;

  NelderMeadResult result;
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> values(n + 1);
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return objective(x);
  };
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto point = [&](double t, const std::vector<double>& worst, std::vector<double>& out) {
    for (std::size_t d = 0; d < n; ++d) out[d] = centroid[d] + t * (centroid[d] - worst[d]);
  };

  while (result.evaluations < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];

    double f_spread = 0.0;
    double x_spread = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      f_spread = std::max(f_spread, std::abs(values[i] - values[best]));
      for (std::size_t d = 0; d < n; ++d) x_spread = std::max(x_spread, std::abs(simplex[i][d] - simplex[best][d]));
    }
    if (f_spread <= options.f_tol && x_spread <= options.x_tol) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d] / dn;
    }

    point(alpha, simplex[worst], trial);
    const double f_reflect = eval(trial);
    if (f_reflect < values[best]) {
      point(alpha * beta, simplex[worst], trial2);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    const bool outside = f_reflect < values[worst];
    point(outside ? alpha * gamma : -gamma, simplex[worst], trial2);
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = f_contract;
      continue;
    }
    // shrink toward the best vertex
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t d = 0; d < n; ++d) {
        simplex[i][d] = simplex[best][d] + delta * (simplex[i][d] - simplex[best][d]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace wehrl
