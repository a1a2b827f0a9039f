#pragma once

#include <functional>
#include <span>
#include <vector>

namespace wehrl {

struct NelderMeadOptions {
  double initial_step = 0.1;
  double f_tol = 1e-13;   // spread of simplex values
  double x_tol = 1e-9;    // max coordinate distance to the best vertex
  long max_evaluations = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Downhill simplex with dimension-adaptive coefficients.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace wehrl
