#include "wehrl/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace wehrl {
namespace {

constexpr int kFactorialTable = 171;

const std::array<double, kFactorialTable>& factorial_table() {
  static const auto table = [] {
    std::array<double, kFactorialTable> t{};
    for (int n = 0; n < kFactorialTable; ++n) t[static_cast<std::size_t>(n)] = std::lgamma(n + 1.0);
    t[0] = 0.0;
    t[1] = 0.0;
    return t;
  }();
  return table;
}

void require_rotation_spin(HalfInt j) {
  require_spin(j);
  if (j.twice() > kMaxTwiceSpin) {
    throw Error(ErrorCode::InvalidSpin,
                "rotation matrices supported for 2J <= " + std::to_string(kMaxTwiceSpin));
  }
}

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Integer arguments from doubled labels; all of these are exact.
int half(int twice) { return twice / 2; }

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "log_factorial of negative integer");
  if (n < kFactorialTable) return factorial_table()[static_cast<std::size_t>(n)];
  return std::lgamma(n + 1.0);
}

double wigner_d(HalfInt j, HalfInt m, HalfInt n, double theta) {
  require_rotation_spin(j);
  require_pair(j, m);
  require_pair(j, n);

  // d^j_{mn} = sqrt((j+m)!(j-m)!(j+n)!(j-n)!)
  //   * sum_s (-1)^{m-n+s} c^{2j+n-m-2s} s^{m-n+2s} / ((j+n-s)! s! (m-n+s)! (j-m-s)!)
  const int jpm = half(j.twice() + m.twice());
  const int jmm = half(j.twice() - m.twice());
  const int jpn = half(j.twice() + n.twice());
  const int jmn = half(j.twice() - n.twice());
  const int m_minus_n = half(m.twice() - n.twice());

  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  // Identity rotation: skip the log-factorial round trip so the result is exact.
  if (s == 0.0 && c > 0.0) return m == n ? 1.0 : 0.0;
  const double log_c = std::log(std::abs(c));
  const double log_s = std::log(std::abs(s));
  const double prefactor =
      0.5 * (log_factorial(jpm) + log_factorial(jmm) + log_factorial(jpn) + log_factorial(jmn));

  const int s_min = std::max(0, -m_minus_n);
  const int s_max = std::min(jpn, jmm);
  CompensatedSum acc;
  for (int k = s_min; k <= s_max; ++k) {
    const int pow_c = jpn + jmm - 2 * k;  // 2j + n - m - 2k
    const int pow_s = m_minus_n + 2 * k;
    if ((pow_c > 0 && c == 0.0) || (pow_s > 0 && s == 0.0)) continue;
    double log_term = prefactor - log_factorial(jpn - k) - log_factorial(k) -
                      log_factorial(m_minus_n + k) - log_factorial(jmm - k);
    if (pow_c > 0) log_term += pow_c * log_c;
    if (pow_s > 0) log_term += pow_s * log_s;
    double term = std::exp(log_term);
    if ((m_minus_n + k) % 2 != 0) term = -term;
    if (c < 0.0 && pow_c % 2 != 0) term = -term;
    if (s < 0.0 && pow_s % 2 != 0) term = -term;
    acc.add(term);
  }
  return acc.value();
}

std::vector<double> wigner_d_matrix(HalfInt j, double theta) {
  require_rotation_spin(j);
  const auto labels = magnetic_labels(j);
  const std::size_t dim = labels.size();
  std::vector<double> out(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) out[r * dim + c] = wigner_d(j, labels[r], labels[c], theta);
  }
  return out;
}

std::vector<double> wigner_d_column(HalfInt j, HalfInt n, double theta) {
  require_rotation_spin(j);
  require_pair(j, n);
  const auto labels = magnetic_labels(j);
  std::vector<double> out(labels.size());
  for (std::size_t r = 0; r < labels.size(); ++r) out[r] = wigner_d(j, labels[r], n, theta);
  return out;
}

cplx rotation_element(HalfInt j, HalfInt m, HalfInt n, const EulerAngles& g) {
  const double d = wigner_d(j, m, n, g.theta);
  const double phase = -(m.value() * g.phi + n.value() * g.psi);
  return std::polar(1.0, phase) * d;
}

SpinState apply_rotation(const EulerAngles& g, const SpinState& u) {
  const HalfInt j = u.j();
  require_rotation_spin(j);
  const auto labels = magnetic_labels(j);
  const auto d = wigner_d_matrix(j, g.theta);
  const std::size_t dim = labels.size();
  std::vector<cplx> out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    cplx acc{};
    for (std::size_t c = 0; c < dim; ++c) {
      acc += std::polar(1.0, -labels[c].value() * g.psi) * d[r * dim + c] * u[c];
    }
    out[r] = std::polar(1.0, -labels[r].value() * g.phi) * acc;
  }
  return SpinState(j, std::move(out));
}

SpinState apply_inverse_rotation(const EulerAngles& g, const SpinState& u) {
  const HalfInt j = u.j();
  require_rotation_spin(j);
  const auto labels = magnetic_labels(j);
  const auto d = wigner_d_matrix(j, g.theta);
  const std::size_t dim = labels.size();
  std::vector<cplx> out(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    cplx acc{};
    for (std::size_t r = 0; r < dim; ++r) {
      acc += std::polar(1.0, labels[r].value() * g.phi) * d[r * dim + c] * u[r];
    }
    out[c] = std::polar(1.0, labels[c].value() * g.psi) * acc;
  }
  return SpinState(j, std::move(out));
}

cplx coherent_overlap(const SpinState& u, const EulerAngles& g, Weight weight) {
  const HalfInt j = u.j();
  const HalfInt n = weight_label(j, weight);
  const auto column = wigner_d_column(j, n, g.theta);
  const auto labels = magnetic_labels(j);
  cplx acc{};
  for (std::size_t r = 0; r < labels.size(); ++r) {
    acc += std::conj(u[r]) * std::polar(1.0, -labels[r].value() * g.phi) * column[r];
  }
  return acc * std::polar(1.0, -n.value() * g.psi);
}

}  // namespace wehrl
