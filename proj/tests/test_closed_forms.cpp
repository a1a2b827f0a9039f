#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wehrl/closed_forms.hpp"
#include "wehrl/spin_core.hpp"

using namespace wehrl;
using oracle::Rational;

TEST(LnGamma, Values) {
  EXPECT_EQ(ln_gamma(1.0), 0.0);
  EXPECT_NEAR(ln_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
  EXPECT_NEAR(ln_gamma(11.0), oracle::log_factorial_exact(10), 1e-14);
  EXPECT_THROW(ln_gamma(0.0), Error);
}

TEST(LogBeta, Values) {
  EXPECT_NEAR(log_beta(1.0, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_beta(2.0, 2.0), std::log(1.0 / 6.0), 1e-15);
  EXPECT_THROW(log_beta(-1.0, 2.0), Error);
}

TEST(HypF, Basics) {
  for (double p : {0.5, 1.0, 2.7}) EXPECT_EQ(hyp_f(p, 0.0), 1.0);
  for (double t : {0.0, 0.3, 1.0}) EXPECT_NEAR(hyp_f(1.0, t), 1.0 + t, 1e-15);
}

TEST(HypF, IntegerDegreesTruncate) {
  for (int p = 0; p <= 8; ++p) {
    for (double t : {0.1, 0.5, 0.9, 1.0}) {
      const SeriesEvaluation ev = hyp_f_series(p, t);
      if (t < 1.0) {
        EXPECT_EQ(ev.nonzero_terms, p + 1) << p;
        EXPECT_FALSE(ev.endpoint_value);
      }
      // Reference: exact rational sum of squared binomials times the binary value of t.
      Rational ref = 0;
      Rational tk = 1;
      const Rational tr(t);
      for (int k = 0; k <= p; ++k) {
        ref += oracle::squared_binomial(p, k) * tk;
        tk *= tr;
      }
      const double want = static_cast<double>(ref);
      EXPECT_NEAR(ev.value, want, 4e-16 * want) << "p=" << p << " t=" << t;
    }
  }
}

TEST(HypF, EndpointIsGaussValue) {
  for (double p : {1.5, 2.25, 3.75}) {
    const double gauss = std::exp(ln_gamma(1 + 2 * p) - 2 * ln_gamma(1 + p));
    EXPECT_NEAR(hyp_f(p, 1.0), gauss, 1e-12 * gauss);
    EXPECT_NEAR(hyp_f(p, 1.0 - 1e-9), gauss, 1e-7 * gauss);
  }
}

TEST(HypF, DerivativeAtOne) {
  for (double t : {0.1, 0.4, 0.8}) {
    const double h = 1e-4;
    EXPECT_NEAR((hyp_f(1 + h, t) - hyp_f(1 - h, t)) / (2 * h), 2 * t, 1e-7);
  }
}

TEST(Legendre, Polynomials) {
  for (double x : {-0.7, 0.0, 0.3, 2.0}) EXPECT_EQ(legendre_poly(1, x), x);
  EXPECT_NEAR(legendre_poly(2, 0.5), -0.125, 1e-16);
  for (int n = 0; n <= 50; ++n) EXPECT_EQ(legendre_poly(n, 1.0), 1.0);
}

TEST(Legendre, FunctionOnRay) {
  EXPECT_EQ(legendre_func(2.7, 1.0), 1.0);
  EXPECT_EQ(legendre_func(1.5, 1.0), 1.0);
  EXPECT_NEAR(legendre_func(2.0, 3.0), 13.0, 1e-12);
  for (int n = 0; n <= 10; ++n) {
    for (double z : {1.0, 1.1, 2.0, 5.0, 10.0}) {
      const double want = legendre_poly(n, z);
      EXPECT_NEAR(legendre_func(n, z), want, 1e-11 * std::abs(want)) << n << " " << z;
    }
  }
  EXPECT_THROW(legendre_func(2.0, 0.5), Error);
}

TEST(OrbitParam, Examples) {
  const HalfInt one(2);
  EXPECT_EQ(orbit_param_a(SpinState::basis(one, -one)).value(), 0.0);
  EXPECT_EQ(orbit_param_a(SpinState::basis(one, HalfInt(0))).value(), 1.0);
  EXPECT_NEAR(orbit_param_a(stratum_representative(0.3)).value(), 0.3, 1e-15);
  EXPECT_NEAR(orbit_param_a(make_state(one, {std::sqrt(0.7), std::sqrt(0.3), 0.0})).value(), 0.3, 1e-15);
  EXPECT_EQ(stratum_representative(0.0), SpinState::basis(one, -one));
  EXPECT_EQ(stratum_representative(1.0), SpinState::basis(one, HalfInt(0)));
  EXPECT_THROW(stratum_representative(1.5), Error);
  EXPECT_THROW(orbit_param_a(SpinState::basis(HalfInt(1), HalfInt(1))), Error);
}

TEST(J1Moments, EndpointForms) {
  EXPECT_NEAR(i_p_o0(1.0), 1.0, 1e-15);
  EXPECT_NEAR(i_p_o1(1.0), 1.0, 1e-15);
  EXPECT_NEAR(i_p_o1(2.0), 0.4, 1e-15);
  EXPECT_NEAR(i_p_o0(3.0), 3.0 / 7.0, 1e-15);
  EXPECT_THROW(i_p_o0(0.0), Error);
}

TEST(J1Moments, IntegralRepresentation) {
  EXPECT_NEAR(i_p_oa_integral_rep(1.0, 0.5), 1.0, 1e-12);
  EXPECT_NEAR(i_p_oa_integral_rep(2.0, 0.5), oracle::j1_moment_adaptive(2.0, 0.5), 1e-9);
  EXPECT_NEAR(i_p_oa_integral_rep(2.0, 1e-6), 0.6, 1e-9);
  // Peaks at t = 0 sharpen near both ends of the a range.
  for (double a : {1e-8, 1e-4, 0.01, 0.3, 0.7, 0.99, 1.0 - 1e-6}) {
    for (double p : {1.0, 2.0, 3.0}) {
      EXPECT_NEAR(i_p_oa_integral_rep(p, a), i_n_oa_triple_sum(static_cast<int>(p), a), 1e-11) << p << " " << a;
    }
  }
  EXPECT_THROW(i_p_oa_integral_rep(2.0, 0.0), Error);
  EXPECT_THROW(i_p_oa_integral_rep(2.0, 1.0), Error);
}

TEST(J1Moments, EntropyFormula) {
  EXPECT_NEAR(s_cl_j1(0.0), 2.0 / 3.0, 1e-16);
  EXPECT_NEAR(s_cl_j1(1.0), 2.0 / 3.0 + 1.0 - std::log(2.0), 1e-15);
  EXPECT_NEAR(s_cl_j1(0.5), 2.0 / 3.0 + 0.5 - std::log(1.5), 1e-15);
  EXPECT_THROW(s_cl_j1(-0.1), Error);
}

TEST(TripleSum, Examples) {
  for (double a : {0.0, 0.25, 0.6, 1.0}) {
    EXPECT_NEAR(i_n_oa_triple_sum(1, a), 1.0, 1e-15);
    EXPECT_NEAR(i_n_oa_triple_sum(2, a), 0.6 * (1.0 - a * a / 3.0), 1e-15);
  }
  const std::vector<double> c3 = i_n_oa_coefficients(3);
  ASSERT_EQ(c3.size(), 4u);
  EXPECT_EQ(c3[1], 0.0);
  EXPECT_EQ(c3[3], 0.0);
  for (int n = 1; n <= 10; ++n) {
    const std::vector<double> c = i_n_oa_coefficients(n);
    for (std::size_t k = 1; k < c.size(); k += 2) EXPECT_EQ(c[k], 0.0) << n << " " << k;
    EXPECT_NEAR(c[0], 3.0 / (2 * n + 1), 1e-16);
  }
  EXPECT_THROW(i_n_oa_triple_sum(11, 0.5), Error);
}

TEST(TripleSum, EndpointsMatchClosedForms) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_NEAR(i_n_oa_triple_sum(n, 0.0), i_p_o0(n), 1e-15);
    EXPECT_NEAR(i_n_oa_triple_sum(n, 1.0), i_p_o1(n), 1e-14);
  }
}

TEST(LegendreForm, Examples) {
  EXPECT_NEAR(i_n_oa_legendre(1, 0.7), 1.0, 1e-15);
  EXPECT_NEAR(i_n_oa_legendre(3, 0.5), i_n_oa_triple_sum(3, 0.5), 1e-15);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_NEAR(i_n_oa_legendre(n, 1.0), i_p_o1(n), 1e-14);
    EXPECT_NEAR(i_n_oa_legendre(n, 0.0), 3.0 / (2 * n + 1), 1e-15);
    for (double a = 0.05; a < 1.0; a += 0.1) EXPECT_NEAR(i_n_oa_legendre(n, a), i_n_oa_triple_sum(n, a), 1e-13);
  }
}

TEST(Hypothesis, Examples) {
  for (double p : {1.0, 1.5, 2.5, 4.0}) EXPECT_NEAR(i_p_oa_hypothesis(p, 0.0), 3.0 / (2 * p + 1), 1e-15);
  for (double a : {0.0, 0.3, 0.8, 1.0}) EXPECT_NEAR(i_p_oa_hypothesis(1.0, a), 1.0, 1e-14);
  for (int n = 1; n <= 8; ++n) EXPECT_NEAR(i_p_oa_hypothesis(n, 0.35), i_n_oa_legendre(n, 0.35), 1e-13);
  EXPECT_NEAR(i_p_oa_hypothesis(2.5, 0.4), oracle::j1_moment_adaptive(2.5, 0.4), 1e-9);
  EXPECT_NEAR(i_p_oa_hypothesis(2.5, 1.0), i_p_o1(2.5), 1e-13);
}

TEST(Hypothesis, EntropyDerivativeReproducesFormula) {
  for (double a = 0.0; a <= 1.0001; a += 0.1) EXPECT_NEAR(s_cl_hypothesis(std::min(a, 1.0)), s_cl_j1(std::min(a, 1.0)), 1e-9);
}

TEST(BasisClosed, Examples) {
  const HalfInt one(2);
  EXPECT_NEAR(i_p_basis_closed(one, -one, 3.0), 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(i_p_basis_closed(one, HalfInt(0), 2.0), 0.4, 1e-15);
  for (int tj = 1; tj <= 12; ++tj) {
    const HalfInt j(tj);
    for (HalfInt m : magnetic_labels(j)) {
      EXPECT_NEAR(i_p_basis_closed(j, m, 1.0), 1.0, 1e-13);
      for (double p : {1.5, 2.0, 3.7}) EXPECT_EQ(i_p_basis_closed(j, m, p), i_p_basis_closed(j, -m, p));
    }
    EXPECT_NEAR(i_p_basis_closed(j, j, 2.5), (tj + 1.0) / (2.5 * tj + 1.0), 1e-14);
  }
  EXPECT_THROW(i_p_basis_closed(one, HalfInt(1), 2.0), Error);
  EXPECT_THROW(i_p_basis_closed(one, one, 0.0), Error);
}

TEST(BasisClosed, EntropyFormula) {
  EXPECT_NEAR(s_cl_basis(HalfInt(2), HalfInt(0)), s_cl_j1(1.0), 1e-15);
  for (int tj = 1; tj <= 12; ++tj) {
    const HalfInt j(tj);
    EXPECT_NEAR(s_cl_basis(j, j), tj / (tj + 1.0), 1e-15);
    EXPECT_NEAR(s_cl_basis(j, -j), tj / (tj + 1.0), 1e-15);
    for (HalfInt m : magnetic_labels(j)) {
      const double h = 1e-4;
      const double fd = -(i_p_basis_closed(j, m, 1 + h) - i_p_basis_closed(j, m, 1 - h)) / (2 * h);
      EXPECT_NEAR(s_cl_basis(j, m), fd, 1e-7) << tj << " " << m.twice();
    }
  }
}

TEST(LogBinomial, MatchesExact) {
  for (int n = 0; n <= 200; n += 7) {
    for (int k = 0; k <= n; k += 3) {
      const oracle::BigInt c = oracle::factorial(n) / (oracle::factorial(k) * oracle::factorial(n - k));
      const double want = oracle::log_bigint(c);
      EXPECT_NEAR(log_binomial(n, k), want, 1e-12 * std::max(1.0, want)) << n << " " << k;
    }
  }
}
