#include "ccf/rate_inference.hpp"

#include <algorithm>
#include <sstream>

#include "ccf/errors.hpp"
#include "ccf/model.hpp"

namespace ccf {

namespace {

SearchDiagnostics diagnostics(const SearchResult& r) {
  return SearchDiagnostics{r.converged, r.sweeps, r.evaluations, r.argument};
}

}  // namespace

GjBounds optimize_gj_bounds(const FailureCounts& n, const DirichletBox& box, int k,
                            int multiplicity, unsigned order, const OptimizerSettings& settings) {
  if (n.size() != static_cast<std::size_t>(k)) {
    throw DimensionError("counts do not match k = " + std::to_string(k));
  }
  validate_box(box, k);
  settings.validate();
  const TaylorApprox approx = g_poly_taylor(k, multiplicity, order);

  std::vector<double> a(n.size());
  auto posterior = [&](double s, std::span<const double> t) -> std::span<const double> {
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = static_cast<double>(n[j]) + s * t[j];
    return a;
  };
  const HyperObjective main = [&](double s, std::span<const double> t) {
    return dirichlet_moment(approx.main, posterior(s, t));
  };
  const HyperObjective error = [&](double s, std::span<const double> t) {
    return dirichlet_moment(approx.error, posterior(s, t));
  };

  const SearchResult lo = optimize_over_box(main, box, settings, Sense::minimize);
  const SearchResult hi = optimize_over_box(main, box, settings, Sense::maximize);
  SearchResult err{0.0, lo.argument, true, 0, 0};
  if (!approx.error.empty()) err = optimize_over_box(error, box, settings, Sense::maximize);

  return GjBounds{Interval{lo.value, hi.value}, std::max(err.value, 0.0), diagnostics(lo),
                  diagnostics(hi), diagnostics(err)};
}

Interval qj_bounds(Interval g, double g_error, Interval qt) {
  if (g.lo < 0.0 || g_error < 0.0 || qt.lo < 0.0) {
    throw DomainError("qj_bounds inputs must be nonnegative");
  }
  Interval::make(g.lo, g.hi);
  Interval::make(qt.lo, qt.hi);
  return Interval{std::max(0.0, g.lo - g_error) * qt.lo, (g.hi + g_error) * qt.hi};
}

bool RateBoundsReport::converged() const noexcept {
  return std::all_of(rates.begin(), rates.end(),
                     [](const RateBounds& r) { return r.search.converged(); });
}

RateBoundsReport full_report(const FailureCounts& n, const DirichletBox& box,
                             const std::optional<MarginalModel>& marginal, unsigned order,
                             const OptimizerSettings& settings) {
  const int k = static_cast<int>(n.size());
  const SystemSize size(k);
  RateBoundsReport report{k, order, {}, std::nullopt, {}, validate_box(box, k), 0.0, {}};
  settings.validate();

  for (const auto& u : report.box_check.unattainable) {
    std::ostringstream os;
    os << (u.upper ? "upper" : "lower") << " bound t_" << u.multiplicity << " = " << u.bound
       << " is not attainable on the simplex; the closest reachable value is " << u.attainable;
    report.warnings.push_back({"unattainable_bound", os.str()});
  }

  report.theta = idm_theta_bounds(n, box);
  for (int l = 2; l <= k; ++l) report.max_expected_x += (l - 1) * report.theta[l - 1].hi;
  if (report.max_expected_x > kLargeTaylorArgument) {
    std::ostringstream os;
    os << "posterior mean of sum_{l>=2} (l-1) theta_l may reach " << report.max_expected_x
       << " (> " << kLargeTaylorArgument
       << "); the truncated series is less accurate there, rely on the error bound";
    report.warnings.push_back({"large_taylor_argument", os.str()});
  }

  if (marginal) report.qt = igm_qt_bounds(marginal->data, marginal->box);

  for (int j = 1; j <= k; ++j) {
    GjBounds g = optimize_gj_bounds(n, box, k, j, order, settings);
    RateBounds rate{j, g.bounds, g.error_bound, std::nullopt, std::nullopt, g};
    if (report.qt) {
      rate.q = qj_bounds(g.bounds, g.error_bound, *report.qt);
      rate.q_uninflated =
          Interval{std::max(0.0, g.bounds.lo) * report.qt->lo, g.bounds.hi * report.qt->hi};
    }
    if (!g.converged()) {
      report.warnings.push_back({"optimizer_not_converged",
                                 "search for g_" + std::to_string(j) +
                                     " hit max_iterations; best values found are reported"});
    }
    report.rates.push_back(std::move(rate));
  }
  return report;
}

}  // namespace ccf
