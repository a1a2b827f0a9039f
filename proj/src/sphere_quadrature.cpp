#include "wehrl/sphere_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wehrl {
namespace {

// Pairwise summation; the tree shape depends only on the length, so results
// are bit-stable however the inputs were produced.
double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double sphere_prefactor(HalfInt j) { return (j.twice() + 1.0) / (4.0 * std::numbers::pi); }

}  // namespace

double husimi_q(const SpinState& u, double theta, double phi, Weight weight) {
  const HalfInt j = u.j();
  const auto column = wigner_d_column(j, weight_label(j, weight), theta);
  const auto labels = magnetic_labels(j);
  cplx acc{};
  for (std::size_t r = 0; r < labels.size(); ++r) {
    acc += std::conj(u[r]) * std::polar(1.0, -labels[r].value() * phi) * column[r];
  }
  return std::norm(acc);
}

HusimiField::HusimiField(const SpinState& u, Weight weight, const SphereGrid& grid)
    : j_(u.j()),
      n_theta_(grid.n_theta()),
      n_phi_(grid.n_phi),
      x_weights_(grid.x_weights),
      phi_weight_(grid.phi_weight()) {
  const SpinState unit = normalize(u);
  const int dim = unit.dim();
  const HalfInt n = weight_label(j_, weight);

  // |sum_m conj(c_m) d_{mn}(theta) e^{-i m phi}| = |sum_l f_l w^l| with
  // l = m + J and w = e^{-i phi}; evaluated by Horner in w.
  std::vector<cplx> w(static_cast<std::size_t>(n_phi_));
  for (int k = 0; k < n_phi_; ++k) w[static_cast<std::size_t>(k)] = std::polar(1.0, -grid.phi_node(k));

  q_.assign(static_cast<std::size_t>(n_theta_) * static_cast<std::size_t>(n_phi_), 0.0);
  std::vector<cplx> f(static_cast<std::size_t>(dim));
  for (int i = 0; i < n_theta_; ++i) {
    const double theta = std::acos(grid.x_nodes[static_cast<std::size_t>(i)]);
    const auto column = wigner_d_column(j_, n, theta);
    for (int l = 0; l < dim; ++l) {
      f[static_cast<std::size_t>(l)] = std::conj(unit[static_cast<std::size_t>(l)]) * column[static_cast<std::size_t>(l)];
    }
    for (int k = 0; k < n_phi_; ++k) {
      const cplx wk = w[static_cast<std::size_t>(k)];
      cplx acc = f[static_cast<std::size_t>(dim - 1)];
      for (int l = dim - 2; l >= 0; --l) acc = acc * wk + f[static_cast<std::size_t>(l)];
      q_[static_cast<std::size_t>(i * n_phi_ + k)] = std::norm(acc);
    }
  }
}

double HusimiField::max_value() const { return *std::max_element(q_.begin(), q_.end()); }

template <class F>
double HusimiField::integrate(F&& integrand) const {
  std::vector<double> rows(static_cast<std::size_t>(n_theta_));
  std::vector<double> row(static_cast<std::size_t>(n_phi_));
  for (int i = 0; i < n_theta_; ++i) {
    for (int k = 0; k < n_phi_; ++k) row[static_cast<std::size_t>(k)] = integrand(at(i, k));
    rows[static_cast<std::size_t>(i)] =
        x_weights_[static_cast<std::size_t>(i)] * pairwise_sum(row.data(), row.size());
  }
  return phi_weight_ * pairwise_sum(rows.data(), rows.size());
}

double HusimiField::moment(double p) const {
  if (!(p > 0.0)) throw Error(ErrorCode::BadExponent, "moment exponent must be > 0");
  const double total = integrate([p](double q) { return q > 0.0 ? std::pow(q, p) : 0.0; });
  return sphere_prefactor(j_) * total;
}

double HusimiField::entropy() const {
  const double total = integrate([](double q) { return q > 0.0 ? q * std::log(q) : 0.0; });
  return -sphere_prefactor(j_) * total;
}

SphereGrid refined_grid(const SphereGrid& grid) {
  return gauss_legendre_grid((3 * grid.n_theta() + 1) / 2, (3 * grid.n_phi + 1) / 2);
}

MomentResult moment_integral(const SpinState& u, double p, Weight weight, const SphereGrid& grid) {
  if (!(p > 0.0)) throw Error(ErrorCode::BadExponent, "moment exponent must be > 0");
  const HusimiField base(u, weight, grid);
  const HusimiField fine(u, weight, refined_grid(grid));
  MomentResult r;
  r.value = base.moment(p);
  r.p = p;
  r.n_theta = grid.n_theta();
  r.n_phi = grid.n_phi;
  r.err_estimate = std::abs(r.value - fine.moment(p));
  return r;
}

double classical_entropy_direct(const SpinState& u, Weight weight, const SphereGrid& grid) {
  return HusimiField(u, weight, grid).entropy();
}

double classical_entropy_pderiv(const SpinState& u, Weight weight, const SphereGrid& grid, double h) {
  if (!(h > 0.0 && h <= 0.1)) throw Error(ErrorCode::BadStep, "step must satisfy 0 < h <= 0.1");
  const HusimiField field(u, weight, grid);
  auto central = [&field](double step) {
    return (field.moment(1.0 - step) - field.moment(1.0 + step)) / (2.0 * step);
  };
  const double coarse = central(h);
  const double fine = central(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

double square_integrability_check(const SpinState& u, const SpinState& v, const SphereGrid& grid) {
  if (u.j() != v.j()) throw Error(ErrorCode::SpinMismatch, "square-integrability check needs equal spins");
  const HalfInt j = u.j();
  const auto labels = magnetic_labels(j);
  const std::size_t dim = labels.size();
  const int n_ang = grid.n_phi;

  std::vector<double> rows(static_cast<std::size_t>(grid.n_theta()));
  std::vector<double> cells(static_cast<std::size_t>(n_ang) * static_cast<std::size_t>(n_ang));
  std::vector<cplx> a(dim);
  for (int i = 0; i < grid.n_theta(); ++i) {
    const double theta = std::acos(grid.x_nodes[static_cast<std::size_t>(i)]);
    const auto d = wigner_d_matrix(j, theta);
    for (int kpsi = 0; kpsi < n_ang; ++kpsi) {
      const double psi = grid.phi_node(kpsi);
      // a_m = sum_n d_{mn} e^{-i n psi} v_n
      for (std::size_t r = 0; r < dim; ++r) {
        cplx acc{};
        for (std::size_t c = 0; c < dim; ++c) {
          acc += d[r * dim + c] * std::polar(1.0, -labels[c].value() * psi) * v[c];
        }
        a[r] = acc;
      }
      for (int kphi = 0; kphi < n_ang; ++kphi) {
        const double phi = grid.phi_node(kphi);
        cplx acc{};
        for (std::size_t r = 0; r < dim; ++r) {
          acc += std::conj(u[r]) * std::polar(1.0, -labels[r].value() * phi) * a[r];
        }
        cells[static_cast<std::size_t>(kpsi * n_ang + kphi)] = std::norm(acc);
      }
    }
    rows[static_cast<std::size_t>(i)] =
        grid.x_weights[static_cast<std::size_t>(i)] * pairwise_sum(cells.data(), cells.size());
  }
  const double dphi = grid.phi_weight();
  const double total = dphi * dphi * pairwise_sum(rows.data(), rows.size());
  return (j.twice() + 1.0) / (8.0 * std::numbers::pi * std::numbers::pi) * total;
}

}  // namespace wehrl
