#pragma once

/// @file conjugate.hpp
/// Precise conjugate updating: Dirichlet-multinomial for the alpha-factors
/// and Gamma-Poisson for the marginal failure rate, with the usual
/// reference priors.

#include <span>
#include <vector>

#include "ccf/polynomial.hpp"

namespace ccf {

/// Observed failure events by multiplicity: n_j events involved exactly j
/// failed components.
class FailureCounts {
 public:
  explicit FailureCounts(std::vector<long> counts);

  std::span<const long> counts() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_.size(); }
  long operator[](std::size_t i) const { return n_[i]; }
  long total() const noexcept { return total_; }

 private:
  std::vector<long> n_;
  long total_ = 0;
};

/// Dirichlet hyperparameters in (s, t) form: prior density proportional to
/// prod theta_j^{s t_j - 1}. t is the prior mean, s the learning parameter.
struct DirichletHyper {
  double s;
  std::vector<double> t;

  /// Throws DomainError unless s > 0 and t lies on the simplex.
  void validate() const;
  friend bool operator==(const DirichletHyper&, const DirichletHyper&) = default;
};

/// M failures observed over exposure T (component-time units).
struct MarginalData {
  long failures = 0;
  double exposure = 0.0;

  void validate() const;
  friend bool operator==(const MarginalData&, const MarginalData&) = default;
};

/// Gamma hyperparameters: density proportional to q^{uv - 1} e^{-q u}.
/// v is the prior mean rate, u the time-like learning parameter.
struct GammaHyper {
  double u;
  double v;

  void validate() const;
  friend bool operator==(const GammaHyper&, const GammaHyper&) = default;
};

/// Pochhammer symbol x (x + 1) ... (x + m - 1); one for m = 0.
double rising_factorial(double x, unsigned m);

/// E(theta_j | n, s, t) = (n_j + s t_j) / (N + s).
std::vector<double> posterior_mean_theta(const FailureCounts& n, const DirichletHyper& h);

/// Posterior expectation of a polynomial in theta under the Dirichlet
/// posterior, term by term through products of rising factorials.
double posterior_poly_expectation(const MonomialPoly& poly, const FailureCounts& n,
                                  const DirichletHyper& h);

/// Kernel of posterior_poly_expectation on raw posterior parameters
/// a_j = n_j + s t_j, without validation. Used in hot loops.
double dirichlet_moment(const MonomialPoly& poly, std::span<const double> a);

/// Closed-form approximation of the constrained non-informative prior:
/// t = mu, s = 1 / (2 (1 - mu_1)). Meant for mu_1 close to one.
DirichletHyper cni_prior(std::span<const double> mu);

/// Uniform prior on the simplex: s t_j = 1.
DirichletHyper uniform_prior(int k);

/// Jeffreys prior for the multinomial: s t_j = 1/2.
DirichletHyper jeffreys_prior(int k);

/// E(q_t | M, T, u, v) = (M + u v) / (u + T).
double posterior_mean_qt(const MarginalData& d, const GammaHyper& g);

}  // namespace ccf
