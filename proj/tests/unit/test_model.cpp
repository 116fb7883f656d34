#include <gtest/gtest.h>

#include <random>

#include "ccf/errors.hpp"
#include "ccf/model.hpp"
#include "support/oracles.hpp"

namespace ccf {
namespace {

TEST(Binomial, ExactValues) {
  EXPECT_EQ(binomial(3, 0), 1u);
  EXPECT_EQ(binomial(3, 1), 3u);
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(16, 8), 12870u);
  EXPECT_EQ(binomial(15, 7), 6435u);
  EXPECT_EQ(binomial(5, 6), 0u);
  EXPECT_EQ(binomial(5, -1), 0u);
}

TEST(SystemSize, RejectsOutOfRange) {
  EXPECT_THROW(SystemSize(0), DomainError);
  EXPECT_THROW(SystemSize(17), DomainError);
  EXPECT_EQ(SystemSize(16).value(), 16);
}

TEST(QtFromQ, IndependentComponents) {
  EXPECT_DOUBLE_EQ(qt_from_q(SystemSize(3), {{0.7, 0.0, 0.0}}), 0.7);
}

TEST(QtFromQ, WeightsByBinomial) {
  EXPECT_DOUBLE_EQ(qt_from_q(SystemSize(3), {{1.0, 1.0, 1.0}}), 4.0);
}

TEST(QtFromQ, SingleComponent) {
  EXPECT_DOUBLE_EQ(qt_from_q(SystemSize(1), {{2.5}}), 2.5);
}

TEST(QtFromQ, DimensionMismatch) {
  EXPECT_THROW(qt_from_q(SystemSize(3), {{1.0, 1.0}}), DimensionError);
  EXPECT_THROW(qt_from_q(SystemSize(2), {{1.0, -1.0}}), DomainError);
}

TEST(AlphaFromQ, ThreeComponentExample) {
  const AlphaFactors theta = alpha_from_q(SystemSize(3), {{1.0, 1.0, 1.0}});
  EXPECT_NEAR(theta[0], 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(theta[1], 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(theta[2], 1.0 / 7.0, 1e-15);
}

TEST(AlphaFromQ, UnitVectors) {
  for (int k = 1; k <= 6; ++k) {
    for (int j = 1; j <= k; ++j) {
      BasicParams q{std::vector<double>(k, 0.0)};
      q.rates[j - 1] = 0.3;
      const AlphaFactors theta = alpha_from_q(SystemSize(k), q);
      for (int i = 1; i <= k; ++i) EXPECT_EQ(theta[i - 1], i == j ? 1.0 : 0.0);
    }
  }
}

TEST(AlphaFromQ, AllZeroIsAnError) {
  EXPECT_THROW(alpha_from_q(SystemSize(3), {{0.0, 0.0, 0.0}}), DomainError);
}

TEST(QFromAlpha, InvertsThreeComponentExample) {
  const BasicParams q =
      q_from_alpha(SystemSize(3), AlphaFactors::from({3.0 / 7, 3.0 / 7, 1.0 / 7}), 4.0);
  for (double r : q.rates) EXPECT_NEAR(r, 1.0, 1e-14);
}

TEST(QFromAlpha, TwoComponentCorners) {
  const BasicParams single = q_from_alpha(SystemSize(2), AlphaFactors::from({1.0, 0.0}), 0.35);
  EXPECT_DOUBLE_EQ(single.rates[0], 0.35);
  EXPECT_DOUBLE_EQ(single.rates[1], 0.0);
  const BasicParams dbl = q_from_alpha(SystemSize(2), AlphaFactors::from({0.0, 1.0}), 0.35);
  EXPECT_DOUBLE_EQ(dbl.rates[0], 0.0);
  EXPECT_DOUBLE_EQ(dbl.rates[1], 0.35);
}

TEST(AlphaFactors, ValidationAndExplicitNormalization) {
  EXPECT_THROW(AlphaFactors::from({0.5, 0.6}), DomainError);
  EXPECT_THROW(AlphaFactors::from({1.2, -0.2}), DomainError);
  EXPECT_THROW(AlphaFactors::from({}), DimensionError);
  const AlphaFactors n = AlphaFactors::normalized({2.0, 6.0});
  EXPECT_DOUBLE_EQ(n[0], 0.25);
  EXPECT_THROW(AlphaFactors::normalized({0.0, 0.0}), DomainError);
}

TEST(GFactor, Examples) {
  EXPECT_NEAR(g_factor(SystemSize(2), 2, AlphaFactors::from({0.8, 0.2})), 1.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(g_factor(SystemSize(2), 1, AlphaFactors::from({1.0, 0.0})), 1.0);
  EXPECT_DOUBLE_EQ(g_factor(SystemSize(4), 1, AlphaFactors::from({1.0, 0.0, 0.0, 0.0})), 1.0);
}

TEST(GFactor, Errors) {
  const std::vector<double> zeros{0.0, 0.0};
  EXPECT_THROW(g_factor(SystemSize(2), 1, zeros), DomainError);
  EXPECT_THROW(g_factor(SystemSize(2), 3, AlphaFactors::from({1.0, 0.0})), DomainError);
  EXPECT_THROW(g_factor(SystemSize(3), 1, AlphaFactors::from({1.0, 0.0})), DimensionError);
}

// Random rate vectors with some exact zeros.
BasicParams random_rates(std::mt19937_64& rng, int k) {
  std::uniform_real_distribution<double> mag(-6.0, 1.0);
  std::bernoulli_distribution zero(0.2);
  BasicParams q{std::vector<double>(k)};
  bool any = false;
  for (double& r : q.rates) {
    r = zero(rng) ? 0.0 : std::pow(10.0, mag(rng));
    any = any || r > 0.0;
  }
  if (!any) q.rates[0] = 1.0;
  return q;
}

TEST(ModelProperties, RoundTripAndConsistency) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> kdist(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const SystemSize k(kdist(rng));
    const BasicParams q = random_rates(rng, k.value());
    const AlphaFactors theta = alpha_from_q(k, q);
    const double qt = qt_from_q(k, q);

    double sum = 0.0;
    for (double x : theta.values()) sum += x;
    EXPECT_NEAR(sum, 1.0, 1e-12);

    const BasicParams back = q_from_alpha(k, theta, qt);
    for (std::size_t j = 0; j < k.size(); ++j) {
      EXPECT_LE(std::abs(back.rates[j] - q.rates[j]), 1e-12 * q.rates[j]) << "k=" << k.value();
    }
    EXPECT_NEAR(qt_from_q(k, back), qt, 1e-12 * qt);

    double share = 0.0;
    for (int j = 1; j <= k.value(); ++j) {
      share += static_cast<double>(binomial(k.value() - 1, j - 1)) * g_factor(k, j, theta);
    }
    EXPECT_NEAR(share, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace ccf
