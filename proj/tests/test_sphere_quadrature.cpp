#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wehrl/closed_forms.hpp"
#include "wehrl/sphere_quadrature.hpp"
#include "wehrl/wigner.hpp"

using namespace wehrl;
using std::numbers::pi;

namespace {

const HalfInt kOne(2);

SpinState coherent(HalfInt j, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 1.0);
  const EulerAngles g(2 * pi * ang(rng), pi * ang(rng), 2 * pi * ang(rng));
  return apply_rotation(g, SpinState::basis(j, -j));
}

}  // namespace

TEST(HusimiQ, Endpoints) {
  for (int tj = 1; tj <= 6; ++tj) {
    const HalfInt j(tj);
    const SpinState top = SpinState::basis(j, j);
    EXPECT_NEAR(husimi_q(top, 0.0, 0.7), 1.0, 1e-15);
    EXPECT_NEAR(husimi_q(top, pi, 0.7), 0.0, 1e-15);
  }
}

TEST(HusimiQ, SpinOneStratumMatchesExplicitBracket) {
  // The printed bracket uses a different azimuth origin: Q(theta, phi) = bracket(phi - pi/2).
  for (double a : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const SpinState u = stratum_representative(a);
    for (double th : {0.1, 0.8, 1.5, 2.3, 3.0}) {
      for (double ph : {0.0, 1.0, 2.5, 4.0, 6.0}) {
        EXPECT_NEAR(husimi_q(u, th, ph), oracle::j1_bracket(a, std::cos(th), ph - pi / 2), 1e-14);
      }
    }
  }
}

TEST(HusimiQ, WeightSymmetry) {
  // Reversing the amplitude order swaps the roles of v_{+J} and v_{-J}.
  const HalfInt j(5);
  const SpinState u = random_haar_state(j, 21);
  std::vector<cplx> rev(u.amplitudes().rbegin(), u.amplitudes().rend());
  const SpinState r = make_state(j, rev);
  const SphereGrid g = default_grid();
  for (double p : {1.5, 2.0, 3.0})
    EXPECT_NEAR(moment_integral(u, p, Weight::Plus, g).value, moment_integral(r, p, Weight::Minus, g).value, 1e-12);
}

TEST(HusimiField, NormalizesInternally) {
  const SpinState u = random_haar_state(HalfInt(3), 4);
  const SphereGrid g = default_grid();
  EXPECT_NEAR(HusimiField(scale(u, 7.0), Weight::Plus, g).moment(2.0), HusimiField(u, Weight::Plus, g).moment(2.0),
              1e-14);
  EXPECT_THROW(HusimiField(u, Weight::Plus, g).moment(0.0), Error);
}

TEST(MomentIntegral, Examples) {
  const SphereGrid g = default_grid();
  EXPECT_NEAR(moment_integral(coherent(kOne, 1), 2.0, Weight::Plus, g).value, 0.6, 1e-10);
  EXPECT_NEAR(moment_integral(SpinState::basis(kOne, HalfInt(0)), 2.0, Weight::Plus, g).value, 0.4, 1e-12);
  for (int tj = 1; tj <= 6; ++tj)
    EXPECT_NEAR(moment_integral(random_haar_state(HalfInt(tj), tj), 1.0, Weight::Plus, g).value, 1.0, 1e-12);
}

TEST(MomentIntegral, MatchesAdaptiveOracle) {
  const SphereGrid g = gauss_legendre_grid(128, 256);
  for (auto [p, a] : {std::pair{2.5, 0.4}, {1.25, 0.7}, {3.75, 0.1}, {2.0, 0.5}}) {
    const double ref = oracle::j1_moment_adaptive(p, a);
    const MomentResult r = moment_integral(stratum_representative(a), p, Weight::Plus, g);
    EXPECT_NEAR(r.value, ref, 1e-9) << "p=" << p << " a=" << a;
    EXPECT_LT(r.err_estimate, 1e-8);
    EXPECT_EQ(r.n_theta, 128);
    EXPECT_EQ(r.n_phi, 256);
  }
}

TEST(MomentIntegral, RotationInvariance) {
  const SphereGrid g = default_grid();
  for (int tj = 1; tj <= 4; ++tj) {
    const SpinState u = random_haar_state(HalfInt(tj), 100 + tj);
    const SpinState r = apply_rotation(EulerAngles(1.3, 2.0, 0.4), u);
    for (double p : {2.0, 3.0}) {
      EXPECT_NEAR(moment_integral(u, p, Weight::Plus, g).value, moment_integral(r, p, Weight::Plus, g).value, 1e-12);
    }
  }
}

TEST(MomentIntegral, DecreasingInP) {
  // Q <= 1 pointwise, so Q^p is nonincreasing in p.
  const SphereGrid g = default_grid();
  const HusimiField f(random_haar_state(HalfInt(4), 9), Weight::Plus, g);
  double prev = f.moment(1.0);
  for (double p = 1.25; p <= 5.0; p += 0.25) {
    const double cur = f.moment(p);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
  EXPECT_LE(f.max_value(), 1.0 + 1e-15);
}

TEST(Entropy, Examples) {
  const SphereGrid g = gauss_legendre_grid(128, 256);
  EXPECT_NEAR(classical_entropy_direct(coherent(kOne, 3), Weight::Plus, g), 2.0 / 3.0, 1e-7);
  EXPECT_NEAR(classical_entropy_direct(SpinState::basis(kOne, HalfInt(0)), Weight::Plus, g),
              2.0 / 3.0 + 1.0 - std::log(2.0), 1e-7);
  EXPECT_NEAR(classical_entropy_direct(stratum_representative(0.5), Weight::Plus, g),
              2.0 / 3.0 + 0.5 - std::log(1.5), 1e-7);
}

TEST(Entropy, PDerivativeRoute) {
  const SphereGrid g = default_grid();
  EXPECT_NEAR(classical_entropy_pderiv(coherent(HalfInt(1), 5), Weight::Plus, g), 0.5, 1e-6);
  const SpinState v0 = SpinState::basis(kOne, HalfInt(0));
  EXPECT_NEAR(classical_entropy_pderiv(v0, Weight::Plus, g), classical_entropy_direct(v0, Weight::Plus, g), 1e-6);
  try {
    classical_entropy_pderiv(v0, Weight::Plus, g, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadStep);
  }
}

TEST(Entropy, ScaleInvariant) {
  const SphereGrid g = default_grid();
  const SpinState u = random_haar_state(HalfInt(3), 12);
  EXPECT_NEAR(classical_entropy_direct(u, Weight::Plus, g), classical_entropy_direct(scale(u, cplx(0.0, -4.0)), Weight::Plus, g),
              1e-13);
}

TEST(SquareIntegrability, Examples) {
  const SphereGrid g = default_grid();
  const SpinState top = SpinState::basis(HalfInt(4), HalfInt(4));
  EXPECT_NEAR(square_integrability_check(top, top, g), 1.0, 1e-12);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const SpinState u = scale(random_haar_state(kOne, 2 * s), 1.5);
    const SpinState v = scale(random_haar_state(kOne, 2 * s + 1), 0.5);
    EXPECT_NEAR(square_integrability_check(u, v, g), u.norm_squared() * v.norm_squared(), 1e-8);
  }
}

TEST(RefinedGrid, Sizes) {
  const SphereGrid r = refined_grid(default_grid());
  EXPECT_EQ(r.n_theta(), 96);
  EXPECT_EQ(r.n_phi, 192);
}
