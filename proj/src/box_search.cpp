#include "ccf/box_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ccf/errors.hpp"
#include "ccf/model.hpp"

namespace ccf {

void OptimizerSettings::validate() const {
  if (grid_points_per_dim < 2) throw DomainError("grid_points_per_dim must be >= 2");
  if (!(refinement_tolerance > 0.0)) throw DomainError("refinement_tolerance must be positive");
  if (max_iterations < 1) throw DomainError("max_iterations must be >= 1");
  if (multistart_count < 1) throw DomainError("multistart_count must be >= 1");
}

namespace {

constexpr long kMaxLatticePoints = 20000;
constexpr int kMaxExhaustiveVertexK = 10;

std::vector<double> linspace(double lo, double hi, int points) {
  if (lo == hi) return {lo};
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  v.back() = hi;
  return v;
}

bool within(const Interval& r, double x) {
  return x >= r.lo - kSimplexTolerance && x <= r.hi + kSimplexTolerance;
}

// Puts the slack coordinate back inside its range after roundoff.
double clamp_to(const Interval& r, double x) { return std::clamp(x, r.lo, r.hi); }

// Vertex of box-and-simplex obtained by starting every coordinate at its
// lower bound and pouring the remaining mass into coordinates in `order`.
std::vector<double> greedy_vertex(const std::vector<Interval>& ranges,
                                  const std::vector<std::size_t>& order) {
  std::vector<double> t(ranges.size());
  double remaining = 1.0;
  for (std::size_t j = 0; j < ranges.size(); ++j) {
    t[j] = ranges[j].lo;
    remaining -= ranges[j].lo;
  }
  for (std::size_t j : order) {
    const double add = std::clamp(remaining, 0.0, ranges[j].width());
    t[j] += add;
    remaining -= add;
  }
  return t;
}

void push_unique(std::vector<std::vector<double>>& points, std::vector<double> t) {
  for (const auto& p : points) {
    bool same = true;
    for (std::size_t i = 0; i < p.size() && same; ++i) same = std::abs(p[i] - t[i]) <= 1e-15;
    if (same) return;
  }
  points.push_back(std::move(t));
}

std::vector<std::vector<double>> simplex_vertices(const std::vector<Interval>& ranges) {
  const std::size_t k = ranges.size();
  std::vector<std::vector<double>> out;

  std::vector<std::size_t> order(k);
  for (std::size_t start = 0; start < k; ++start) {
    for (std::size_t i = 0; i < k; ++i) order[i] = (start + i) % k;
    push_unique(out, greedy_vertex(ranges, order));
    std::reverse(order.begin(), order.end());
    push_unique(out, greedy_vertex(ranges, order));
  }

  if (k > static_cast<std::size_t>(kMaxExhaustiveVertexK)) return out;

  // A vertex has every coordinate but one (the slack) at a bound.
  for (std::size_t slack = 0; slack < k; ++slack) {
    const std::size_t others = k - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others); ++mask) {
      std::vector<double> t(k);
      double sum = 0.0;
      std::size_t bit = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == slack) continue;
        t[j] = (mask >> bit++) & 1u ? ranges[j].hi : ranges[j].lo;
        sum += t[j];
      }
      const double rest = 1.0 - sum;
      if (!within(ranges[slack], rest)) continue;
      t[slack] = clamp_to(ranges[slack], rest);
      push_unique(out, std::move(t));
    }
  }
  return out;
}

std::vector<std::vector<double>> lattice_points(const std::vector<Interval>& ranges, int grid) {
  const std::size_t k = ranges.size();
  std::vector<std::size_t> free_dims;
  for (std::size_t j = 1; j < k; ++j) {
    if (!ranges[j].is_point()) free_dims.push_back(j);
  }
  if (free_dims.empty()) return {};

  // Shrink the per-dimension resolution until the lattice fits.
  int per_dim = grid;
  while (per_dim > 2 &&
         std::pow(static_cast<double>(per_dim), static_cast<double>(free_dims.size())) >
             static_cast<double>(kMaxLatticePoints)) {
    --per_dim;
  }

  std::vector<std::vector<double>> axes;
  for (std::size_t d : free_dims) axes.push_back(linspace(ranges[d].lo, ranges[d].hi, per_dim));

  std::vector<std::vector<double>> out;
  std::vector<std::size_t> index(free_dims.size(), 0);
  std::vector<double> t(k);
  for (std::size_t j = 1; j < k; ++j) t[j] = ranges[j].lo;
  while (true) {
    double sum = 0.0;
    for (std::size_t i = 0; i < free_dims.size(); ++i) t[free_dims[i]] = axes[i][index[i]];
    for (std::size_t j = 1; j < k; ++j) sum += t[j];
    const double t1 = 1.0 - sum;
    if (within(ranges[0], t1)) {
      t[0] = clamp_to(ranges[0], t1);
      out.push_back(t);
    }
    std::size_t d = 0;
    while (d < index.size() && ++index[d] == axes[d].size()) index[d++] = 0;
    if (d == index.size()) break;
  }
  return out;
}

// Golden-section search for the minimum of f on [a, b]; returns the best
// abscissa among the bracket endpoints and the final interior point.
double golden_minimize(const std::function<double(double)>& f, double a, double b) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = 1e-10 * (b - a) + 1e-15;
  double lo = a, hi = b;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  double best = fc <= fd ? c : d;
  double best_value = std::min(fc, fd);
  for (double edge : {a, b}) {
    const double v = f(edge);
    if (v < best_value) {
      best_value = v;
      best = edge;
    }
  }
  return best;
}

struct Refiner {
  const std::function<double(const HyperPoint&)>& f;  // minimised
  const DirichletBox& box;
  const OptimizerSettings& settings;

  // Returns (converged, sweeps); updates point and value in place.
  std::pair<bool, int> run(HyperPoint& point, double& value) const {
    const std::size_t k = box.size();
    for (int sweep = 1; sweep <= settings.max_iterations; ++sweep) {
      const double before = value;

      if (!box.s_range.is_point()) {
        HyperPoint trial = point;
        auto line = [&](double s) {
          trial.s = s;
          return f(trial);
        };
        const double s = golden_minimize(line, box.s_range.lo, box.s_range.hi);
        trial.s = s;
        const double v = f(trial);
        if (v < value) {
          value = v;
          point.s = s;
        }
      }

      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          const Interval& ra = box.t_ranges[a];
          const Interval& rb = box.t_ranges[b];
          const double lo = std::max(ra.lo - point.t[a], point.t[b] - rb.hi);
          const double hi = std::min(ra.hi - point.t[a], point.t[b] - rb.lo);
          if (!(hi - lo > 1e-14)) continue;
          HyperPoint trial = point;
          auto move = [&](double delta) {
            trial.t[a] = clamp_to(ra, point.t[a] + delta);
            trial.t[b] = clamp_to(rb, point.t[b] - delta);
          };
          auto line = [&](double delta) {
            move(delta);
            return f(trial);
          };
          const double delta = golden_minimize(line, std::min(lo, 0.0), std::max(hi, 0.0));
          move(delta);
          const double v = f(trial);
          if (v < value) {
            value = v;
            point.t = trial.t;
          }
        }
      }

      if (before - value <= settings.refinement_tolerance) return {true, sweep};
    }
    return {false, settings.max_iterations};
  }
};

}  // namespace

std::vector<HyperPoint> candidate_points(const DirichletBox& box,
                                         const OptimizerSettings& settings) {
  settings.validate();
  validate_box(box, static_cast<int>(box.size()));
  const std::vector<double> s_values =
      linspace(box.s_range.lo, box.s_range.hi, settings.grid_points_per_dim);

  std::vector<std::vector<double>> t_points = simplex_vertices(box.t_ranges);
  for (auto& t : lattice_points(box.t_ranges, settings.grid_points_per_dim)) {
    t_points.push_back(std::move(t));
  }

  std::vector<HyperPoint> out;
  out.reserve(s_values.size() * t_points.size());
  for (double s : s_values) {
    for (const auto& t : t_points) out.push_back(HyperPoint{s, t});
  }
  return out;
}

SearchResult optimize_over_box(const HyperObjective& objective, const DirichletBox& box,
                               const OptimizerSettings& settings, Sense sense) {
  const std::vector<HyperPoint> candidates = candidate_points(box, settings);
  if (candidates.empty()) throw InfeasibleError("no feasible hyperparameters in the box");

  long evaluations = 0;
  const double sign = sense == Sense::minimize ? 1.0 : -1.0;
  const std::function<double(const HyperPoint&)> f = [&](const HyperPoint& p) {
    ++evaluations;
    return sign * objective(p.s, p.t);
  };

  std::vector<double> scores(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) scores[i] = f(candidates[i]);
  std::vector<std::size_t> rank(candidates.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::stable_sort(rank.begin(), rank.end(),
                   [&](std::size_t x, std::size_t y) { return scores[x] < scores[y]; });

  const Refiner refiner{f, box, settings};
  const std::size_t starts =
      std::min(rank.size(), static_cast<std::size_t>(settings.multistart_count));

  SearchResult best{scores[rank[0]], candidates[rank[0]], true, 0, 0};
  bool all_converged = true;
  for (std::size_t i = 0; i < starts; ++i) {
    HyperPoint point = candidates[rank[i]];
    double value = scores[rank[i]];
    const auto [converged, sweeps] = refiner.run(point, value);
    all_converged = all_converged && converged;
    if (i == 0 || value < best.value) {
      best.value = value;
      best.argument = std::move(point);
      best.sweeps = sweeps;
    }
  }
  best.value *= sign;
  best.converged = all_converged;
  best.evaluations = evaluations;
  return best;
}

}  // namespace ccf
