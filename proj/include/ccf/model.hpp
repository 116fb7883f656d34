#pragma once

/// @file model.hpp
/// Basic parameter model and its alpha-factor reparametrisation for a
/// system of k exchangeable components.
///
/// Multiplicities are 1-based throughout the public API: rate index j
/// means "exactly j components fail together". Vectors store
/// multiplicity j at position j - 1.

#include <cstdint>
#include <span>
#include <vector>

namespace ccf {

/// Tolerance used to decide whether a vector lies on the unit simplex.
inline constexpr double kSimplexTolerance = 1e-12;

/// Exact binomial coefficient C(n, r); zero when r is out of range.
std::uint64_t binomial(int n, int r);

/// Number of exchangeable components, 1 <= k <= 16.
class SystemSize {
 public:
  static constexpr int kMax = 16;

  explicit SystemSize(int k);

  int value() const noexcept { return k_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(k_); }

  friend bool operator==(SystemSize, SystemSize) = default;

 private:
  int k_;
};

/// Per-multiplicity failure rates q_1..q_k (events per unit time).
struct BasicParams {
  std::vector<double> rates;
};

/// Alpha-factors: the fraction of failure events involving exactly j of
/// the k components. Always lies on the simplex.
class AlphaFactors {
 public:
  /// Validates that every entry is in [0, 1] and the entries sum to one
  /// within kSimplexTolerance.
  static AlphaFactors from(std::vector<double> theta);

  /// Rescales a nonnegative, not-all-zero vector onto the simplex.
  static AlphaFactors normalized(std::vector<double> weights);

  std::span<const double> values() const noexcept { return theta_; }
  std::size_t size() const noexcept { return theta_.size(); }
  double operator[](std::size_t i) const { return theta_[i]; }

 private:
  explicit AlphaFactors(std::vector<double> theta) : theta_(std::move(theta)) {}
  std::vector<double> theta_;
};

/// Marginal failure rate of one component: q_t = sum_j C(k-1, j-1) q_j.
double qt_from_q(SystemSize k, const BasicParams& q);

/// theta_j = C(k, j) q_j / sum_l C(k, l) q_l.
AlphaFactors alpha_from_q(SystemSize k, const BasicParams& q);

/// Inverse map: q_j = g_j(theta) * q_t.
BasicParams q_from_alpha(SystemSize k, const AlphaFactors& theta, double q_t);

/// g_j(theta) = j theta_j / (C(k-1, j-1) sum_l l theta_l), the share of the
/// marginal rate carried by multiplicity j.
double g_factor(SystemSize k, int multiplicity, const AlphaFactors& theta);

/// Same as above for an unvalidated weight vector; only requires
/// nonnegative entries and a positive denominator.
double g_factor(SystemSize k, int multiplicity, std::span<const double> theta);

}  // namespace ccf
