#pragma once

/// @file rate_inference.hpp
/// Lower and upper posterior expectations of the common-cause failure
/// rates q_j = g_j(theta) q_t, combining the Dirichlet box for the
/// alpha-factors with the Gamma box for the marginal rate.

#include <optional>
#include <string>
#include <vector>

#include "ccf/box_search.hpp"
#include "ccf/imprecise.hpp"
#include "ccf/taylor.hpp"

namespace ccf {

inline constexpr unsigned kDefaultTaylorOrder = 4;

/// Posterior mean of x above which the truncated series loses accuracy.
inline constexpr double kLargeTaylorArgument = 0.5;

struct SearchDiagnostics {
  bool converged;
  int sweeps;
  long evaluations;
  HyperPoint argument;
  friend bool operator==(const SearchDiagnostics&, const SearchDiagnostics&) = default;
};

struct GjBounds {
  Interval bounds;     // min and max of the approximated E(g_j) over the box
  double error_bound;  // max over the box of the expected error polynomial
  SearchDiagnostics lower;
  SearchDiagnostics upper;
  SearchDiagnostics error;

  bool converged() const noexcept {
    return lower.converged && upper.converged && error.converged;
  }
};

GjBounds optimize_gj_bounds(const FailureCounts& n, const DirichletBox& box, int k,
                            int multiplicity, unsigned order, const OptimizerSettings& settings);

/// [(g.lo - err) qt.lo, (g.hi + err) qt.hi], floored at zero.
Interval qj_bounds(Interval g, double g_error, Interval qt);

/// Marginal-rate evidence and prior box.
struct MarginalModel {
  MarginalData data;
  GammaBox box;
  friend bool operator==(const MarginalModel&, const MarginalModel&) = default;
};

struct Warning {
  std::string code;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct RateBounds {
  int multiplicity;
  Interval g;
  double error_bound;
  std::optional<Interval> q;              // error-inflated, present with a marginal model
  std::optional<Interval> q_uninflated;   // g.lo qt.lo .. g.hi qt.hi
  GjBounds search;
};

struct RateBoundsReport {
  int k;
  unsigned taylor_order;
  std::vector<Interval> theta;
  std::optional<Interval> qt;
  std::vector<RateBounds> rates;
  BoxValidation box_check;
  double max_expected_x;  // upper bound on E(x) over the box
  std::vector<Warning> warnings;

  bool converged() const noexcept;
};

/// Runs the full pipeline. Without a marginal model the report carries
/// theta and g_j bounds only.
RateBoundsReport full_report(const FailureCounts& n, const DirichletBox& box,
                             const std::optional<MarginalModel>& marginal, unsigned order,
                             const OptimizerSettings& settings);

}  // namespace ccf
