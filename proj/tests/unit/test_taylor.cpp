#include <gtest/gtest.h>

#include <random>

#include "ccf/errors.hpp"
#include "ccf/model.hpp"
#include "ccf/taylor.hpp"
#include "support/oracles.hpp"

namespace ccf {
namespace {

TEST(TruncatedReciprocal, Examples) {
  EXPECT_DOUBLE_EQ(truncated_reciprocal(0.5, 2), 0.75);
  EXPECT_DOUBLE_EQ(truncated_reciprocal(0.3, 1), 0.7);
  EXPECT_NEAR(truncated_reciprocal(0.3, 2), 0.79, 1e-15);
  for (unsigned p = 0; p < 6; ++p) EXPECT_EQ(truncated_reciprocal(0.0, p), 1.0);
}

TEST(TruncatedReciprocal, ParityBracketsForAllNonnegativeX) {
  for (double x = 0.0; x <= 3.0; x += 0.05) {
    const double exact = 1.0 / (1.0 + x);
    for (unsigned p = 0; p <= 8; ++p) {
      const double approx = truncated_reciprocal(x, p);
      const double gap = std::pow(x, p + 1);
      if (p % 2 == 0) {
        EXPECT_GE(approx, exact - 1e-14);
        EXPECT_LE(approx - exact, gap + 1e-12);
      } else {
        EXPECT_LE(approx, exact + 1e-14);
        EXPECT_LE(exact - approx, gap + 1e-12);
      }
    }
  }
}

TEST(GPolyTaylor, TwoComponentSecondOrder) {
  const TaylorApprox a = g_poly_taylor(2, 2, 2);
  MonomialPoly expected(2);
  expected.add_term(2.0, {0, 1});
  expected.add_term(-2.0, {0, 2});
  expected.add_term(2.0, {0, 3});
  EXPECT_EQ(a.main, expected);
  MonomialPoly error(2);
  error.add_term(2.0, {0, 4});
  EXPECT_EQ(a.error, error);
  EXPECT_TRUE(a.over_approximates());
}

TEST(GPolyTaylor, FourComponentFirstOrder) {
  const TaylorApprox a = g_poly_taylor(4, 1, 1);
  MonomialPoly expected(4);
  expected.add_term(1.0, {1, 0, 0, 0});
  expected.add_term(-1.0, {1, 1, 0, 0});
  expected.add_term(-2.0, {1, 0, 1, 0});
  expected.add_term(-3.0, {1, 0, 0, 1});
  EXPECT_EQ(a.main, expected);
  EXPECT_FALSE(a.over_approximates());
}

TEST(GPolyTaylor, TwoComponentFourthOrderSingle) {
  const TaylorApprox a = g_poly_taylor(2, 1, 4);
  MonomialPoly expected(2);
  for (unsigned m = 0; m <= 4; ++m) expected.add_term(m % 2 ? -1.0 : 1.0, {1, m});
  EXPECT_EQ(a.main, expected);
}

TEST(GPolyTaylor, DegreesAndScaling) {
  for (int k = 2; k <= 5; ++k) {
    for (int j = 1; j <= k; ++j) {
      for (unsigned p = 0; p <= 4; ++p) {
        const TaylorApprox a = g_poly_taylor(k, j, p);
        EXPECT_EQ(a.main.degree(), p + 1);
        EXPECT_EQ(a.error.degree(), p + 2);
      }
    }
  }
  // k = 3, j = 2: leading coefficient 2 / C(2, 1) = 1.
  EXPECT_DOUBLE_EQ(g_poly_taylor(3, 2, 0).main.terms().at({0, 1, 0}), 1.0);
  // Single component: g_1 = theta_1 exactly, no error term.
  const TaylorApprox single = g_poly_taylor(1, 1, 4);
  EXPECT_EQ(single.main.term_count(), 1u);
  EXPECT_TRUE(single.error.empty());
}

TEST(GPolyTaylor, Guards) {
  EXPECT_THROW(g_poly_taylor(2, 3, 2), DomainError);
  EXPECT_THROW(g_poly_taylor(2, 1, kMaxTaylorOrder + 1), DomainError);
  EXPECT_THROW(g_poly_taylor(16, 1, 8), DomainError);
  EXPECT_NO_THROW(g_poly_taylor(6, 3, 8));
}

TEST(ExpectedGj, TwoComponentNestedClosedForms) {
  const FailureCounts n({8, 3});
  for (double s : {1.0, 2.5, 4.0}) {
    for (double t2 : {0.1, 0.15, 0.2}) {
      const DirichletHyper h{s, {1.0 - t2, t2}};
      const double a1 = 8 + s * (1.0 - t2);
      const double a2 = 3 + s * t2;
      const double total = 11 + s;

      const GjExpectation g1 = expected_gj(n, h, 2, 1, 2);
      EXPECT_NEAR(g1.value, a1 / total * (1 - a2 / (total + 1) * (1 - (a2 + 1) / (total + 2))),
                  1e-14);
      EXPECT_NEAR(g1.error_bound,
                  a1 * a2 * (a2 + 1) * (a2 + 2) /
                      (total * (total + 1) * (total + 2) * (total + 3)),
                  1e-15);

      const GjExpectation g2 = expected_gj(n, h, 2, 2, 2);
      EXPECT_NEAR(g2.value,
                  2 * a2 / total * (1 - (a2 + 1) / (total + 1) * (1 - (a2 + 2) / (total + 2))),
                  1e-14);
      double product = 2.0;
      for (int i = 0; i < 4; ++i) product *= (a2 + i) / (total + i);
      EXPECT_NEAR(g2.error_bound, product, 1e-15);
    }
  }
}

TEST(ExpectedGj, FrozenQuadratureValue) {
  // Beta-marginal quadrature at 30 digits for E(2 theta_2 (1 - theta_2 + ... + theta_2^4)).
  const GjExpectation g = expected_gj(FailureCounts({8, 3}), DirichletHyper{1.0, {0.9, 0.1}}, 2, 2, 4);
  EXPECT_NEAR(g.value, 0.39965013701923077, 1e-8);
  EXPECT_NEAR(g.error_bound, 0.005103946668956044, 1e-8);
  EXPECT_GE(g.value, 0.35);
  EXPECT_LE(g.value, 0.42);
  const double exact = 0.39624005227171004;
  EXPECT_LE(g.lower_enclosure(), exact);
  EXPECT_GE(g.upper_enclosure(), exact);
}

TEST(TaylorProperties, ParityEnclosureAtRandomPoints) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + trial % 3;
    const std::vector<double> theta = testing::random_simplex_point(rng, k);
    const int j = 1 + trial % k;
    const unsigned p = static_cast<unsigned>(trial % 5);
    const double exact = g_factor(SystemSize(k), j, theta);
    const TaylorApprox odd = g_poly_taylor(k, j, 2 * (p / 2) + 1);
    const TaylorApprox even = g_poly_taylor(k, j, 2 * (p / 2));
    EXPECT_LE(odd.main.evaluate(theta), exact + 1e-13);
    EXPECT_GE(even.main.evaluate(theta), exact - 1e-13);
    for (const TaylorApprox* a : {&odd, &even}) {
      EXPECT_LE(std::abs(a->main.evaluate(theta) - exact), a->error.evaluate(theta) + 1e-13);
    }
  }
}

TEST(TaylorProperties, ExpectationBracketsQuadrature) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> count(0, 12);
  std::uniform_real_distribution<double> strength(1.0, 8.0);
  std::uniform_real_distribution<double> mean(0.1, 0.9);
  for (int trial = 0; trial < 40; ++trial) {
    const FailureCounts n({count(rng), count(rng)});
    const double t2 = mean(rng);
    const DirichletHyper h{strength(rng), {1.0 - t2, t2}};
    const double a1 = n[0] + h.s * h.t[0];
    const double a2 = n[1] + h.s * h.t[1];
    for (int j = 1; j <= 2; ++j) {
      auto g = [j](double x) { return (j == 1 ? 1.0 - x : 2.0 * x) / (1.0 + x); };
      const double exact = testing::beta_expectation(g, a2, a1);
      for (unsigned p = 0; p <= 5; p += 1) {
        const GjExpectation e = expected_gj(n, h, 2, j, p);
        EXPECT_GE(e.upper_enclosure(), exact - 1e-8) << "p=" << p;
        EXPECT_LE(e.lower_enclosure(), exact + 1e-8) << "p=" << p;
        const GjExpectation next = expected_gj(n, h, 2, j, p + 1);
        const double lo = std::min(e.value, next.value);
        const double hi = std::max(e.value, next.value);
        EXPECT_GE(exact, lo - 1e-8);
        EXPECT_LE(exact, hi + 1e-8);
      }
    }
  }
}

}  // namespace
}  // namespace ccf
