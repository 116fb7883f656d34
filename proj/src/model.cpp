#include "ccf/model.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ccf/errors.hpp"

namespace ccf {

namespace {

void check_dimension(SystemSize k, std::size_t n, const char* what) {
  if (n != k.size()) {
    throw DimensionError(std::string(what) + " has " + std::to_string(n) +
                         " entries, expected k = " + std::to_string(k.value()));
  }
}

void check_multiplicity(SystemSize k, int j) {
  if (j < 1 || j > k.value()) {
    throw DomainError("multiplicity " + std::to_string(j) + " outside 1.." +
                      std::to_string(k.value()));
  }
}

void check_rates(const BasicParams& q) {
  for (double r : q.rates) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw DomainError("failure rates must be finite and nonnegative");
    }
  }
}

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  // c * (n - r + i) stays divisible by i at every step.
  for (int i = 1; i <= r; ++i) {
    c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return c;
}

SystemSize::SystemSize(int k) : k_(k) {
  if (k < 1 || k > kMax) {
    throw DomainError("system size k = " + std::to_string(k) + " outside 1.." +
                      std::to_string(kMax));
  }
}

AlphaFactors AlphaFactors::from(std::vector<double> theta) {
  if (theta.empty()) throw DimensionError("alpha-factors must be non-empty");
  double sum = 0.0;
  for (double x : theta) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw DomainError("alpha-factors must lie in [0, 1]");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw DomainError("alpha-factors sum to " + std::to_string(sum) +
                      ", not 1");
  }
  return AlphaFactors(std::move(theta));
}

AlphaFactors AlphaFactors::normalized(std::vector<double> weights) {
  if (weights.empty()) throw DimensionError("alpha-factors must be non-empty");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (sum <= 0.0) throw DomainError("cannot normalize an all-zero vector");
  for (double& w : weights) w /= sum;
  return AlphaFactors(std::move(weights));
}

double qt_from_q(SystemSize k, const BasicParams& q) {
  check_dimension(k, q.rates.size(), "rate vector");
  check_rates(q);
  double qt = 0.0;
  for (int j = 1; j <= k.value(); ++j) {
    qt += static_cast<double>(binomial(k.value() - 1, j - 1)) * q.rates[j - 1];
  }
  return qt;
}

AlphaFactors alpha_from_q(SystemSize k, const BasicParams& q) {
  check_dimension(k, q.rates.size(), "rate vector");
  check_rates(q);
  std::vector<double> weighted(k.size());
  for (int j = 1; j <= k.value(); ++j) {
    weighted[j - 1] = static_cast<double>(binomial(k.value(), j)) * q.rates[j - 1];
  }
  if (std::accumulate(weighted.begin(), weighted.end(), 0.0) <= 0.0) {
    throw DomainError("all failure rates are zero; alpha-factors undefined");
  }
  return AlphaFactors::normalized(std::move(weighted));
}

BasicParams q_from_alpha(SystemSize k, const AlphaFactors& theta, double q_t) {
  check_dimension(k, theta.size(), "alpha-factor vector");
  if (!(q_t >= 0.0) || !std::isfinite(q_t)) {
    throw DomainError("marginal rate must be finite and nonnegative");
  }
  BasicParams q{std::vector<double>(k.size())};
  for (int j = 1; j <= k.value(); ++j) {
    q.rates[j - 1] = g_factor(k, j, theta.values()) * q_t;
  }
  return q;
}

double g_factor(SystemSize k, int multiplicity, const AlphaFactors& theta) {
  return g_factor(k, multiplicity, theta.values());
}

double g_factor(SystemSize k, int multiplicity, std::span<const double> theta) {
  check_dimension(k, theta.size(), "alpha-factor vector");
  check_multiplicity(k, multiplicity);
  double mean_multiplicity = 0.0;
  for (int l = 1; l <= k.value(); ++l) {
    if (!(theta[l - 1] >= 0.0)) throw DomainError("alpha-factors must be nonnegative");
    mean_multiplicity += l * theta[l - 1];
  }
  if (mean_multiplicity <= 0.0) {
    throw DomainError("degenerate alpha-factors: sum of l * theta_l is zero");
  }
  const int j = multiplicity;
  return j * theta[j - 1] /
         (static_cast<double>(binomial(k.value() - 1, j - 1)) * mean_multiplicity);
}

}  // namespace ccf
