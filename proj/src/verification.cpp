#include "wehrl/verification.hpp"

#include <algorithm>
#include <cmath>

#include "wehrl/closed_forms.hpp"
#include "wehrl/conjectures.hpp"
#include "wehrl/sphere_quadrature.hpp"

namespace wehrl {
namespace {

void record(CheckResult& check, double deviation) {
  check.max_deviation = std::max(check.max_deviation, std::isfinite(deviation) ? deviation : INFINITY);
  ++check.cases;
}

std::vector<double> a_grid() {
  std::vector<double> out;
  for (int k = 0; k <= 10; ++k) out.push_back(k / 10.0);
  return out;
}

}  // namespace

std::vector<CheckResult> verify_identities(const SphereGrid& grid, std::uint64_t seed) {
  CheckResult normalization{"normalization |I_1 - 1|", 0.0, 1e-10, 0};
  CheckResult square{"square integrability |3D - |u|^2|v|^2|", 0.0, 1e-8, 0};
  CheckResult routes{"entropy direct vs p-derivative", 0.0, 1e-6, 0};
  CheckResult jensen{"cosine-power Beta identity", 0.0, 1e-10, 0};

  std::uint64_t counter = 0;
  for (int two_j = 1; two_j <= 6; ++two_j) {
    const HalfInt j(two_j);
    // exact for the polynomial integrand: degree 2J in x, 2J in phi and psi
    const SphereGrid small = gauss_legendre_grid(two_j + 2, 2 * two_j + 2);
    for (int s = 0; s < 10; ++s) {
      const SpinState u = random_haar_state(j, derive_seed(seed, counter++));
      record(normalization, std::abs(HusimiField(u, Weight::Plus, grid).moment(1.0) - 1.0));
      if (s < 3) {
        const SpinState v = scale(random_haar_state(j, derive_seed(seed, counter++)), cplx(0.7, -1.3));
        const SpinState w = scale(u, 2.5);
        const double expected = w.norm_squared() * v.norm_squared();
        record(square, std::abs(square_integrability_check(w, v, small) - expected));
        record(routes, std::abs(classical_entropy_direct(u, Weight::Plus, grid) -
                                classical_entropy_pderiv(u, Weight::Plus, grid)));
      }
    }
  }
  for (int k = 0; k <= 10; ++k) record(jensen, jensen_identity_check(0.5 * k));
  return {normalization, square, routes, jensen};
}

std::vector<CheckResult> verify_hypothesis(const SphereGrid& grid) {
  CheckResult triple_vs_legendre{"triple sum vs Legendre form, n <= 6", 0.0, 1e-9, 0};
  CheckResult triple_vs_quad{"triple sum vs quadrature, n <= 6", 0.0, 1e-9, 0};
  CheckResult rep_vs_hyp{"integral representation vs Legendre function", 0.0, 1e-8, 0};
  CheckResult hyp_vs_quad{"Legendre function vs quadrature, noninteger p", 0.0, 1e-7, 0};
  CheckResult entropy{"-dI/dp of Legendre function form vs 2/3 + a - ln(1+a)", 0.0, 1e-7, 0};

  const auto as = a_grid();
  for (double a : as) {
    const HusimiField field(stratum_representative(a), Weight::Plus, grid);
    for (int n = 1; n <= 6; ++n) {
      const double triple = i_n_oa_triple_sum(n, a);
      record(triple_vs_legendre, std::abs(triple - i_n_oa_legendre(n, a)));
      record(triple_vs_quad, std::abs(triple - field.moment(n)));
    }
    for (double p : {1.25, 1.5, 2.5, 3.75}) {
      const double hyp = i_p_oa_hypothesis(p, a);
      if (a > 0.0 && a < 1.0) {
        record(rep_vs_hyp, std::abs(i_p_oa_integral_rep(p, a) - hyp));
        record(hyp_vs_quad, std::abs(field.moment(p) - hyp));
      }
    }
    record(entropy, std::abs(s_cl_hypothesis(a) - s_cl_j1(a)));
  }
  return {triple_vs_legendre, triple_vs_quad, rep_vs_hyp, hyp_vs_quad, entropy};
}

}  // namespace wehrl
