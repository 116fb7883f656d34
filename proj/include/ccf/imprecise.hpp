#pragma once

/// @file imprecise.hpp
/// Sets of conjugate priors given by boxes of hyperparameters, and the
/// closed-form lower and upper posterior expectations they induce.

#include <string>
#include <vector>

#include "ccf/conjugate.hpp"
#include "ccf/interval.hpp"

namespace ccf {

/// Box H of Dirichlet hyperparameters: s in s_range, t on the simplex with
/// t_j in t_ranges[j - 1].
struct DirichletBox {
  Interval s_range;
  std::vector<Interval> t_ranges;

  std::size_t size() const noexcept { return t_ranges.size(); }
  bool is_singleton() const;

  /// Precise box {(s, t)}.
  static DirichletBox singleton(const DirichletHyper& h);
  /// Fixed s, each t_j a point.
  static DirichletBox with_fixed_t(Interval s_range, const std::vector<double>& t);
  friend bool operator==(const DirichletBox&, const DirichletBox&) = default;
};

/// Box J of Gamma hyperparameters. A zero lower bound on v stands for the
/// limit v -> 0.
struct GammaBox {
  Interval u_range;
  Interval v_range;

  void validate() const;
  static GammaBox singleton(const GammaHyper& g);
  friend bool operator==(const GammaBox&, const GammaBox&) = default;
};

/// A t-bound that no point of box-and-simplex reaches.
struct UnattainableBound {
  int multiplicity;  // 1-based
  bool upper;        // false: the lower bound
  double bound;
  double attainable;  // the tightest value the simplex admits
  friend bool operator==(const UnattainableBound&, const UnattainableBound&) = default;
};

struct BoxValidation {
  std::vector<UnattainableBound> unattainable;
  bool all_attainable() const noexcept { return unattainable.empty(); }
};

/// Checks the box against the simplex. Throws DomainError for malformed
/// ranges (s_lo <= 0, t outside [0, 1]), DimensionError when the length
/// differs from k, and InfeasibleError when sum t_lo > 1 or sum t_hi < 1.
/// Bounds that are valid but unattainable are reported, not tightened.
BoxValidation validate_box(const DirichletBox& box, int k);

/// Per-j lower and upper posterior expectations of theta_j over the box,
/// by evaluating both learning-parameter extremes.
std::vector<Interval> idm_theta_bounds(const FailureCounts& n, const DirichletBox& box);

/// Lower and upper posterior expectations of q_t over the Gamma box.
Interval igm_qt_bounds(const MarginalData& d, const GammaBox& box);

/// Near-ignorance set: fixed s, t anywhere on the simplex.
DirichletBox near_ignorance_box(int k, double s);

/// One line of a hypothetical-data elicitation table.
struct ElicitationRow {
  std::string evidence;  // hypothetical observation, in words
  std::string quantity;  // e.g. "upper E(theta_2)"
  int multiplicity;      // the theta_j or 0 for q_t
  double amount;         // hypothetical count m or time T
  long failures;         // hypothetical failures (rate tables), else -1
  double value;
  friend bool operator==(const ElicitationRow&, const ElicitationRow&) = default;
};

struct ElicitationTable {
  std::string kind;  // "alpha" or "rate"
  std::vector<ElicitationRow> rows;
  friend bool operator==(const ElicitationTable&, const ElicitationTable&) = default;
};

/// Posterior bounds after hypothetical counts m, for a draft box with
/// t_hi_1 = 1 and t_lo_j = 0 for j >= 2. For each m and each j >= 2 the
/// table holds
///   upper theta_j after m single failures        s_hi t_hi_j / (m + s_hi)
///   upper theta_j after m j-component failures   (m + s_lo t_hi_j) / (m + s_lo)
///   lower theta_j after m j-component failures  m / (m + s_hi)
/// plus once per m
///   lower theta_1 after m multi-component failures  s_lo t_lo_1 / (m + s_lo).
ElicitationTable elicit_alpha_learning(const DirichletBox& draft, const std::vector<double>& counts);

/// Hypothetical observation for rate elicitation.
struct HypotheticalExposure {
  long failures;
  double exposure;
  friend bool operator==(const HypotheticalExposure&, const HypotheticalExposure&) = default;
};

/// For each hypothetical (M, T): the lower q_t with v_lo taken as zero,
/// M / (T + u_hi), and the lower q_t with no failures, u_lo v_lo / (T + u_lo).
ElicitationTable elicit_qt_learning(const GammaBox& draft,
                                    const std::vector<HypotheticalExposure>& data);

}  // namespace ccf
