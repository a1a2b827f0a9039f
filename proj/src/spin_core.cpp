#include "wehrl/spin_core.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace wehrl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SpinMismatch: return "SpinMismatch";
    case ErrorCode::InvalidSpin: return "InvalidSpin";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::BadGridSize: return "BadGridSize";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::BadStep: return "BadStep";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::WrongSpin: return "WrongSpin";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void require_spin(HalfInt j) {
  if (!is_valid_spin(j)) {
    throw Error(ErrorCode::InvalidSpin, "spin 2J=" + std::to_string(j.twice()) + " must be >= 1");
  }
}

void require_pair(HalfInt j, HalfInt m) {
  if (!is_valid_pair(j, m)) {
    throw Error(ErrorCode::InvalidPair, "(2J, 2m) = (" + std::to_string(j.twice()) + ", " +
                                            std::to_string(m.twice()) + ")");
  }
}

std::vector<HalfInt> magnetic_labels(HalfInt j) {
  require_spin(j);
  std::vector<HalfInt> out;
  out.reserve(static_cast<std::size_t>(j.twice() + 1));
  for (int t = -j.twice(); t <= j.twice(); t += 2) out.emplace_back(t);
  return out;
}

SpinState::SpinState(HalfInt j, std::vector<cplx> amplitudes) : j_(j), amps_(std::move(amplitudes)) {
  require_spin(j_);
  if (amps_.size() != static_cast<std::size_t>(j_.twice() + 1)) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(j_.twice() + 1) +
                                                  " amplitudes, got " + std::to_string(amps_.size()));
  }
  for (const auto& c : amps_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::NonFinite, "amplitude is not finite");
    }
  }
}

SpinState SpinState::basis(HalfInt j, HalfInt m) {
  require_pair(j, m);
  std::vector<cplx> amps(static_cast<std::size_t>(j.twice() + 1), cplx{});
  amps[index_of(j, m)] = 1.0;
  return SpinState(j, std::move(amps));
}

cplx SpinState::amplitude(HalfInt m) const {
  require_pair(j_, m);
  return amps_[index_of(j_, m)];
}

double SpinState::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amps_) s += std::norm(c);
  return s;
}

double SpinState::norm() const {
  // hypot-style scaling so tiny or huge amplitudes do not under/overflow
  double scale = 0.0;
  for (const auto& c : amps_) scale = std::max({scale, std::abs(c.real()), std::abs(c.imag())});
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& c : amps_) s += std::norm(c / scale);
  return scale * std::sqrt(s);
}

SpinState make_state(HalfInt j, std::vector<cplx> amplitudes) {
  return SpinState(j, std::move(amplitudes));
}

SpinState normalize(const SpinState& u) {
  const double n = u.norm();
  if (!(n > 0.0)) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  std::vector<cplx> amps(u.amplitudes().begin(), u.amplitudes().end());
  for (auto& c : amps) c /= n;
  return SpinState(u.j(), std::move(amps));
}

SpinState scale(const SpinState& u, cplx factor) {
  std::vector<cplx> amps(u.amplitudes().begin(), u.amplitudes().end());
  for (auto& c : amps) c *= factor;
  return SpinState(u.j(), std::move(amps));
}

cplx inner(const SpinState& u, const SpinState& v) {
  if (u.j() != v.j()) throw Error(ErrorCode::SpinMismatch, "inner product of different spins");
  cplx s{};
  for (int i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 over the pair; cheap and well mixed
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SpinState random_haar_state(HalfInt j, std::uint64_t seed) {
  require_spin(j);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amps(static_cast<std::size_t>(j.twice() + 1));
  for (auto& c : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    c = {re, im};
  }
  return normalize(SpinState(j, std::move(amps)));
}

EulerAngles::EulerAngles(double phi_, double theta_, double psi_) : phi(phi_), theta(theta_), psi(psi_) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(phi >= 0.0 && phi < two_pi) || !(psi >= 0.0 && psi < two_pi) ||
      !(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw Error(ErrorCode::DomainError, "Euler angles out of range");
  }
}

double SphereGrid::phi_weight() const { return 2.0 * std::numbers::pi / n_phi; }

double SphereGrid::phi_node(int k) const { return phi_weight() * k; }

SphereGrid gauss_legendre_grid(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) {
    throw Error(ErrorCode::BadGridSize, "grid sizes must be >= 2, got (" + std::to_string(n_theta) +
                                            ", " + std::to_string(n_phi) + ")");
  }
  const int n = n_theta;
  SphereGrid grid;
  grid.n_phi = n_phi;
  grid.x_nodes.assign(static_cast<std::size_t>(n), 0.0);
  grid.x_weights.assign(static_cast<std::size_t>(n), 0.0);

  // Newton on P_n from the Tricomi initial guess; roots are symmetric so only
  // half are computed.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    grid.x_nodes[lo] = -x;
    grid.x_nodes[hi] = x;
    grid.x_weights[lo] = w;
    grid.x_weights[hi] = w;
  }
  if (n % 2 == 1) grid.x_nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return grid;
}

}  // namespace wehrl
