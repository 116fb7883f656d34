#include "ccf/taylor.hpp"

#include <string>

#include "ccf/errors.hpp"
#include "ccf/model.hpp"

namespace ccf {

double truncated_reciprocal(double x, unsigned order) {
  double sum = 0.0;
  double power = 1.0;
  for (unsigned m = 0; m <= order; ++m) {
    sum += power;
    power *= -x;
  }
  return sum;
}

namespace {

// Upper bound on the number of monomials in sum_{m<=order} x^m when x
// involves `vars` variables.
std::size_t expansion_size(int vars, unsigned order) {
  if (vars <= 0) return 1;
  // sum_{m=0}^{order} C(m + vars - 1, vars - 1) = C(order + vars, vars)
  return static_cast<std::size_t>(binomial(static_cast<int>(order) + vars, vars));
}

}  // namespace

TaylorApprox g_poly_taylor(int k, int multiplicity, unsigned order) {
  const SystemSize size(k);
  if (multiplicity < 1 || multiplicity > k) {
    throw DomainError("multiplicity " + std::to_string(multiplicity) + " outside 1.." +
                      std::to_string(k));
  }
  if (order > kMaxTaylorOrder) {
    throw DomainError("Taylor order " + std::to_string(order) + " exceeds " +
                      std::to_string(kMaxTaylorOrder));
  }
  if (expansion_size(k - 1, order + 1) > kMaxTaylorTerms) {
    throw DomainError("Taylor expansion of order " + std::to_string(order) + " for k = " +
                      std::to_string(k) + " exceeds the term limit");
  }

  const std::size_t vars = size.size();
  MonomialPoly x(vars);
  for (int l = 2; l <= k; ++l) x += MonomialPoly::variable(vars, l - 1, l - 1.0);

  const double scale =
      multiplicity / static_cast<double>(binomial(k - 1, multiplicity - 1));
  const MonomialPoly lead = MonomialPoly::variable(vars, multiplicity - 1, scale);

  MonomialPoly series = MonomialPoly::constant(vars, 1.0);
  MonomialPoly power = MonomialPoly::constant(vars, 1.0);
  for (unsigned m = 1; m <= order; ++m) {
    power = power * x;
    series += power * (m % 2 == 0 ? 1.0 : -1.0);
  }
  power = power * x;

  return TaylorApprox{k, multiplicity, order, lead * series, lead * power};
}

GjExpectation expected_gj(const TaylorApprox& approx, const FailureCounts& n,
                          const DirichletHyper& h) {
  return GjExpectation{posterior_poly_expectation(approx.main, n, h),
                       posterior_poly_expectation(approx.error, n, h),
                       approx.over_approximates()};
}

GjExpectation expected_gj(const FailureCounts& n, const DirichletHyper& h, int k,
                          int multiplicity, unsigned order) {
  return expected_gj(g_poly_taylor(k, multiplicity, order), n, h);
}

}  // namespace ccf
