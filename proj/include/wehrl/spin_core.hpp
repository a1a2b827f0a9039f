#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "wehrl/error.hpp"

namespace wehrl {

using cplx = std::complex<double>;

/// Half-integer stored as twice its value, so J = 3/2 is HalfInt{3}.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int twice) : twice_(twice) {}

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  int twice_ = 0;
};

/// A spin label J must be at least 1/2.
constexpr bool is_valid_spin(HalfInt j) { return j.twice() >= 1; }

/// |m| <= J and J - m integer.
constexpr bool is_valid_pair(HalfInt j, HalfInt m) {
  if (!is_valid_spin(j)) return false;
  const int d = j.twice() - m.twice();
  return (m.twice() <= j.twice()) && (-m.twice() <= j.twice()) && (d % 2 == 0);
}

void require_spin(HalfInt j);
void require_pair(HalfInt j, HalfInt m);

/// All magnetic labels -J, -J+1, ..., J in ascending order.
std::vector<HalfInt> magnetic_labels(HalfInt j);

/// Pure state of a spin-J system; amplitude index i corresponds to m = -J + i.
/// Amplitudes are kept exactly as given, no implicit normalization.
class SpinState {
 public:
  SpinState(HalfInt j, std::vector<cplx> amplitudes);

  static SpinState basis(HalfInt j, HalfInt m);

  HalfInt j() const { return j_; }
  int dim() const { return j_.twice() + 1; }
  std::span<const cplx> amplitudes() const { return amps_; }
  cplx amplitude(HalfInt m) const;
  cplx operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  double norm() const;

  bool operator==(const SpinState&) const = default;

 private:
  HalfInt j_;
  std::vector<cplx> amps_;
};

/// Maps m onto the amplitude index, assuming the pair is valid.
constexpr std::size_t index_of(HalfInt j, HalfInt m) {
  return static_cast<std::size_t>((m.twice() + j.twice()) / 2);
}

SpinState make_state(HalfInt j, std::vector<cplx> amplitudes);
SpinState normalize(const SpinState& u);
SpinState scale(const SpinState& u, cplx factor);

/// (u, v), conjugate-linear in u.
cplx inner(const SpinState& u, const SpinState& v);

/// Unit state drawn from the unitarily invariant measure; deterministic in seed.
SpinState random_haar_state(HalfInt j, std::uint64_t seed);

/// Derives an independent per-sample seed from a base seed and an index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Rotation g = Rz(phi) Ry(theta) Rz(psi); ranges are checked on construction.
struct EulerAngles {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;

  EulerAngles() = default;
  EulerAngles(double phi_, double theta_, double psi_);
};

/// Tensor-product rule over (x = cos theta, phi): Gauss-Legendre in x and
/// a uniform grid in phi with spacing 2 pi / n_phi.
struct SphereGrid {
  std::vector<double> x_nodes;
  std::vector<double> x_weights;
  int n_phi = 0;

  int n_theta() const { return static_cast<int>(x_nodes.size()); }
  double phi_weight() const;
  double phi_node(int k) const;
};

SphereGrid gauss_legendre_grid(int n_theta, int n_phi);

inline constexpr int kDefaultThetaNodes = 64;
inline constexpr int kDefaultPhiNodes = 128;

inline SphereGrid default_grid() {
  return gauss_legendre_grid(kDefaultThetaNodes, kDefaultPhiNodes);
}

}  // namespace wehrl
