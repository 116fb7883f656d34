#include "ccf/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccf/errors.hpp"
#include "ccf/model.hpp"

namespace ccf {

FailureCounts::FailureCounts(std::vector<long> counts) : n_(std::move(counts)) {
  if (n_.empty()) throw DimensionError("failure counts must be non-empty");
  for (long c : n_) {
    if (c < 0) throw DomainError("failure counts must be nonnegative");
    total_ += c;
  }
}

void DirichletHyper::validate() const {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("Dirichlet learning parameter s must be positive");
  }
  AlphaFactors::from(t);
}

void MarginalData::validate() const {
  if (failures < 0) throw DomainError("failure count M must be nonnegative");
  if (!(exposure >= 0.0) || !std::isfinite(exposure)) {
    throw DomainError("exposure time T must be nonnegative");
  }
  if (failures > 0 && exposure == 0.0) {
    throw DomainError("M > 0 failures require positive exposure time T");
  }
}

void GammaHyper::validate() const {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("Gamma parameter u must be positive");
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("Gamma parameter v must be positive");
}

double rising_factorial(double x, unsigned m) {
  double r = 1.0;
  for (unsigned i = 0; i < m; ++i) r *= x + i;
  return r;
}

namespace {

void check_match(const FailureCounts& n, const DirichletHyper& h) {
  if (n.size() != h.t.size()) {
    throw DimensionError("counts have " + std::to_string(n.size()) +
                         " entries but t has " + std::to_string(h.t.size()));
  }
  h.validate();
}

std::vector<double> posterior_params(const FailureCounts& n, const DirichletHyper& h) {
  std::vector<double> a(n.size());
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = static_cast<double>(n[j]) + h.s * h.t[j];
  return a;
}

}  // namespace

std::vector<double> posterior_mean_theta(const FailureCounts& n, const DirichletHyper& h) {
  check_match(n, h);
  std::vector<double> mean = posterior_params(n, h);
  const double denom = static_cast<double>(n.total()) + h.s;
  for (double& m : mean) m /= denom;
  return mean;
}

double dirichlet_moment(const MonomialPoly& poly, std::span<const double> a) {
  if (poly.variables() != a.size()) throw DimensionError("polynomial arity mismatch");
  if (poly.empty()) return 0.0;

  double total = 0.0;
  for (double x : a) total += x;

  // Tabulate x^(m) for every exponent that occurs.
  const Exponents max_exp = poly.max_exponents();
  std::vector<std::vector<double>> rising(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    rising[j].resize(max_exp[j] + 1);
    rising[j][0] = 1.0;
    for (unsigned m = 1; m <= max_exp[j]; ++m) rising[j][m] = rising[j][m - 1] * (a[j] + m - 1);
  }
  const unsigned degree = poly.degree();
  std::vector<double> denom(degree + 1);
  denom[0] = 1.0;
  for (unsigned m = 1; m <= degree; ++m) denom[m] = denom[m - 1] * (total + m - 1);

  double sum = 0.0;
  for (const auto& [e, c] : poly.terms()) {
    double term = c;
    unsigned p = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      term *= rising[j][e[j]];
      p += e[j];
    }
    sum += term / denom[p];
  }
  return sum;
}

double posterior_poly_expectation(const MonomialPoly& poly, const FailureCounts& n,
                                  const DirichletHyper& h) {
  check_match(n, h);
  return dirichlet_moment(poly, posterior_params(n, h));
}

DirichletHyper cni_prior(std::span<const double> mu) {
  AlphaFactors::from(std::vector<double>(mu.begin(), mu.end()));
  if (mu[0] >= 1.0) {
    throw DomainError("constrained non-informative prior needs mu_1 < 1");
  }
  return DirichletHyper{1.0 / (2.0 * (1.0 - mu[0])), std::vector<double>(mu.begin(), mu.end())};
}

DirichletHyper uniform_prior(int k) {
  const SystemSize size(k);
  return DirichletHyper{static_cast<double>(k), std::vector<double>(size.size(), 1.0 / k)};
}

DirichletHyper jeffreys_prior(int k) {
  const SystemSize size(k);
  return DirichletHyper{0.5 * k, std::vector<double>(size.size(), 1.0 / k)};
}

double posterior_mean_qt(const MarginalData& d, const GammaHyper& g) {
  d.validate();
  g.validate();
  return (static_cast<double>(d.failures) + g.u * g.v) / (g.u + d.exposure);
}

}  // namespace ccf
