#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the library's moment or bound routines.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace ccf::testing {

/// E f(X) for X ~ Beta(a, b), by tanh-sinh quadrature (handles the
/// endpoint singularities of a, b < 1).
inline double beta_expectation(const std::function<double(double)>& f, double a, double b) {
  const double log_norm = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  auto integrand = [&](double x, double xc) {
    // On the right half xc = 1 - x, exact near the endpoint.
    const double one_minus = xc > 0.0 ? xc : 1.0 - x;
    if (x <= 0.0 || one_minus <= 0.0) return 0.0;
    return f(x) * std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log(one_minus) - log_norm);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(integrand, 0.0, 1.0);
}

/// Points (s, t) on a regular grid over s_values x (t-box with simplex),
/// t_2..t_k stepping by `step` and including the upper endpoints,
/// t_1 = 1 - sum. k <= 4 keeps this small.
struct GridPoint {
  double s;
  std::vector<double> t;
};

inline std::vector<double> grid_axis(double lo, double hi, double step) {
  std::vector<double> v;
  if (hi <= lo) return {lo};
  for (double x = lo; x < hi - 1e-12; x += step) v.push_back(x);
  v.push_back(hi);
  return v;
}

inline std::vector<GridPoint> simplex_box_grid(const std::vector<double>& s_values,
                                               const std::vector<double>& t_lo,
                                               const std::vector<double>& t_hi, double step) {
  const std::size_t k = t_lo.size();
  std::vector<std::vector<double>> axes;
  for (std::size_t j = 1; j < k; ++j) axes.push_back(grid_axis(t_lo[j], t_hi[j], step));
  std::vector<GridPoint> out;
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    std::vector<double> t(k);
    double sum = 0.0;
    for (std::size_t j = 1; j < k; ++j) {
      t[j] = axes[j - 1][idx[j - 1]];
      sum += t[j];
    }
    t[0] = 1.0 - sum;
    if (t[0] >= t_lo[0] - 1e-12 && t[0] <= t_hi[0] + 1e-12) {
      t[0] = std::clamp(t[0], t_lo[0], t_hi[0]);
      for (double s : s_values) out.push_back({s, t});
    }
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == axes[d].size()) idx[d++] = 0;
    if (d == idx.size() || idx.empty()) break;
  }
  return out;
}

/// Uniform point on the k-simplex.
inline std::vector<double> random_simplex_point(std::mt19937_64& rng, std::size_t k) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> x(k);
  double sum = 0.0;
  for (double& v : x) sum += (v = e(rng));
  for (double& v : x) v /= sum;
  return x;
}

/// Ratio-form posterior expectation of theta_j for fixed (s, t).
inline double direct_posterior_mean(const std::vector<long>& n, double s,
                                    const std::vector<double>& t, std::size_t j) {
  long total = 0;
  for (long c : n) total += c;
  return (n[j] + s * t[j]) / (total + s);
}

}  // namespace ccf::testing
