#include "ccf/imprecise.hpp"

#include <cmath>
#include <sstream>

#include "ccf/errors.hpp"
#include "ccf/model.hpp"

namespace ccf {

Interval Interval::make(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    std::ostringstream os;
    os << "invalid interval [" << lo << ", " << hi << "]";
    throw DomainError(os.str());
  }
  return Interval{lo, hi};
}

std::ostream& operator<<(std::ostream& os, const Interval& i) {
  return os << '[' << i.lo << ", " << i.hi << ']';
}

bool DirichletBox::is_singleton() const {
  if (!s_range.is_point()) return false;
  for (const auto& r : t_ranges) {
    if (!r.is_point()) return false;
  }
  return true;
}

DirichletBox DirichletBox::singleton(const DirichletHyper& h) {
  return with_fixed_t(Interval::point(h.s), h.t);
}

DirichletBox DirichletBox::with_fixed_t(Interval s_range, const std::vector<double>& t) {
  DirichletBox box{s_range, {}};
  box.t_ranges.reserve(t.size());
  for (double x : t) box.t_ranges.push_back(Interval::point(x));
  return box;
}

void GammaBox::validate() const {
  Interval::make(u_range.lo, u_range.hi);
  Interval::make(v_range.lo, v_range.hi);
  if (!(u_range.lo > 0.0)) throw DomainError("u_lo must be positive");
  if (!(v_range.lo >= 0.0)) throw DomainError("v_lo must be nonnegative");
  if (!std::isfinite(u_range.hi) || !std::isfinite(v_range.hi)) {
    throw DomainError("Gamma box bounds must be finite");
  }
}

GammaBox GammaBox::singleton(const GammaHyper& g) {
  return GammaBox{Interval::point(g.u), Interval::point(g.v)};
}

BoxValidation validate_box(const DirichletBox& box, int k) {
  const SystemSize size(k);
  if (box.size() != size.size()) {
    throw DimensionError("Dirichlet box has " + std::to_string(box.size()) +
                         " t-ranges, expected k = " + std::to_string(k));
  }
  Interval::make(box.s_range.lo, box.s_range.hi);
  if (!(box.s_range.lo > 0.0) || !std::isfinite(box.s_range.hi)) {
    throw DomainError("s range must satisfy 0 < s_lo <= s_hi < inf");
  }
  double sum_lo = 0.0;
  double sum_hi = 0.0;
  for (std::size_t j = 0; j < box.size(); ++j) {
    const Interval& r = box.t_ranges[j];
    Interval::make(r.lo, r.hi);
    if (r.lo < 0.0 || r.hi > 1.0) {
      throw DomainError("t-range for j = " + std::to_string(j + 1) + " not within [0, 1]");
    }
    sum_lo += r.lo;
    sum_hi += r.hi;
  }
  if (sum_lo > 1.0 + kSimplexTolerance) {
    std::ostringstream os;
    os << "infeasible Dirichlet box: sum of t_lo = " << sum_lo << " exceeds 1";
    throw InfeasibleError(os.str());
  }
  if (sum_hi < 1.0 - kSimplexTolerance) {
    std::ostringstream os;
    os << "infeasible Dirichlet box: sum of t_hi = " << sum_hi << " is below 1";
    throw InfeasibleError(os.str());
  }

  BoxValidation report;
  for (std::size_t j = 0; j < box.size(); ++j) {
    const Interval& r = box.t_ranges[j];
    const double others_hi = sum_hi - r.hi;
    const double others_lo = sum_lo - r.lo;
    // t_j can go no lower than 1 - (others at their upper bounds).
    const double min_reachable = std::max(r.lo, 1.0 - others_hi);
    const double max_reachable = std::min(r.hi, 1.0 - others_lo);
    const int m = static_cast<int>(j + 1);
    if (r.lo + others_hi < 1.0 - kSimplexTolerance) {
      report.unattainable.push_back({m, false, r.lo, min_reachable});
    }
    if (r.hi + others_lo > 1.0 + kSimplexTolerance) {
      report.unattainable.push_back({m, true, r.hi, max_reachable});
    }
  }
  return report;
}

namespace {

double weighted_update(double count, double total, double s, double t) {
  return (count + s * t) / (total + s);
}

}  // namespace

std::vector<Interval> idm_theta_bounds(const FailureCounts& n, const DirichletBox& box) {
  validate_box(box, static_cast<int>(n.size()));
  const double total = static_cast<double>(n.total());
  const double s_lo = box.s_range.lo;
  const double s_hi = box.s_range.hi;
  std::vector<Interval> out;
  out.reserve(n.size());
  for (std::size_t j = 0; j < n.size(); ++j) {
    const double c = static_cast<double>(n[j]);
    const Interval& t = box.t_ranges[j];
    // The update is monotone in s for fixed t, so the extremes sit at s_lo
    // or s_hi; evaluating both covers either side of the case split.
    const double lo = std::min(weighted_update(c, total, s_lo, t.lo),
                               weighted_update(c, total, s_hi, t.lo));
    const double hi = std::max(weighted_update(c, total, s_lo, t.hi),
                               weighted_update(c, total, s_hi, t.hi));
    out.push_back(Interval{lo, hi});
  }
  return out;
}

Interval igm_qt_bounds(const MarginalData& d, const GammaBox& box) {
  d.validate();
  box.validate();
  const double m = static_cast<double>(d.failures);
  const double time = d.exposure;
  auto update = [&](double u, double v) { return (m + u * v) / (time + u); };
  const double lo = std::min(update(box.u_range.lo, box.v_range.lo),
                             update(box.u_range.hi, box.v_range.lo));
  const double hi = std::max(update(box.u_range.lo, box.v_range.hi),
                             update(box.u_range.hi, box.v_range.hi));
  return Interval{lo, hi};
}

DirichletBox near_ignorance_box(int k, double s) {
  const SystemSize size(k);
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("s must be positive");
  return DirichletBox{Interval::point(s), std::vector<Interval>(size.size(), Interval{0.0, 1.0})};
}

ElicitationTable elicit_alpha_learning(const DirichletBox& draft,
                                       const std::vector<double>& counts) {
  const int k = static_cast<int>(draft.size());
  validate_box(draft, k);
  if (k < 2) throw DomainError("alpha elicitation needs k >= 2");
  if (draft.t_ranges[0].hi != 1.0) {
    throw DomainError("alpha elicitation assumes t_hi_1 = 1");
  }
  for (int j = 2; j <= k; ++j) {
    if (draft.t_ranges[j - 1].lo != 0.0) {
      throw DomainError("alpha elicitation assumes t_lo_j = 0 for j >= 2");
    }
  }
  const double s_lo = draft.s_range.lo;
  const double s_hi = draft.s_range.hi;
  ElicitationTable table{"alpha", {}};
  for (double m : counts) {
    if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("hypothetical counts must be >= 0");
    for (int j = 2; j <= k; ++j) {
      const double t_hi = draft.t_ranges[j - 1].hi;
      const std::string js = std::to_string(j);
      table.rows.push_back({"m one-component failures", "upper E(theta_" + js + ")", j, m, -1,
                            s_hi * t_hi / (m + s_hi)});
      table.rows.push_back({"m " + js + "-component failures", "upper E(theta_" + js + ")", j, m,
                            -1, (m + s_lo * t_hi) / (m + s_lo)});
      table.rows.push_back({"m " + js + "-component failures", "lower E(theta_" + js + ")", j, m,
                            -1, m / (m + s_hi)});
    }
    table.rows.push_back({"m multi-component failures", "lower E(theta_1)", 1, m, -1,
                          s_lo * draft.t_ranges[0].lo / (m + s_lo)});
  }
  return table;
}

ElicitationTable elicit_qt_learning(const GammaBox& draft,
                                    const std::vector<HypotheticalExposure>& data) {
  draft.validate();
  ElicitationTable table{"rate", {}};
  for (const auto& h : data) {
    MarginalData{h.failures, h.exposure}.validate();
    const double m = static_cast<double>(h.failures);
    table.rows.push_back({"M failures in time T", "lower E(q_t) with v_lo = 0", 0, h.exposure,
                          h.failures, m / (h.exposure + draft.u_range.hi)});
    table.rows.push_back({"time T without failures", "lower E(q_t)", 0, h.exposure, 0,
                          draft.u_range.lo * draft.v_range.lo / (h.exposure + draft.u_range.lo)});
  }
  return table;
}

}  // namespace ccf
