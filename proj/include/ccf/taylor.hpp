#pragma once

/// @file taylor.hpp
/// Truncated geometric-series approximations of the rate share
/// g_j(theta) = j theta_j / (C(k-1, j-1) (1 + x)), x = sum_{l>=2} (l-1) theta_l,
/// with a one-sided error term that holds for every x >= 0.

#include "ccf/conjugate.hpp"
#include "ccf/polynomial.hpp"

namespace ccf {

inline constexpr unsigned kMaxTaylorOrder = 8;
inline constexpr std::size_t kMaxTaylorTerms = 200000;

/// sum_{m=0}^{order} (-x)^m. Over-estimates 1/(1+x) for even order and
/// under-estimates it for odd order; the gap never exceeds x^{order+1}.
double truncated_reciprocal(double x, unsigned order);

/// Polynomial approximant of g_j and its error polynomial.
struct TaylorApprox {
  int k;
  int multiplicity;
  unsigned order;
  MonomialPoly main;   // c theta_j sum_{m<=order} (-x)^m
  MonomialPoly error;  // c theta_j x^{order+1}

  /// Even orders bound g_j from above, odd orders from below.
  bool over_approximates() const noexcept { return order % 2 == 0; }
};

/// Builds the expansion for multiplicity j of a k-component system.
/// Throws DomainError for order > kMaxTaylorOrder or when the expansion
/// would exceed kMaxTaylorTerms terms.
TaylorApprox g_poly_taylor(int k, int multiplicity, unsigned order);

/// Posterior expectation of the approximant and of its error polynomial.
/// The true E(g_j) lies in [value - error_bound, value] for even order and
/// in [value, value + error_bound] for odd order.
struct GjExpectation {
  double value;
  double error_bound;
  bool over_approximates;

  double lower_enclosure() const noexcept { return over_approximates ? value - error_bound : value; }
  double upper_enclosure() const noexcept { return over_approximates ? value : value + error_bound; }
};

GjExpectation expected_gj(const FailureCounts& n, const DirichletHyper& h, int k,
                          int multiplicity, unsigned order);
GjExpectation expected_gj(const TaylorApprox& approx, const FailureCounts& n,
                          const DirichletHyper& h);

}  // namespace ccf
