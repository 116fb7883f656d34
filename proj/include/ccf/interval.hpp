#pragma once

#include <algorithm>
#include <ostream>

namespace ccf {

/// Closed interval [lo, hi] carrying a lower/upper pair.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  /// Throws DomainError if lo > hi or either end is NaN.
  static Interval make(double lo, double hi);
  static Interval point(double x) { return Interval{x, x}; }

  double width() const noexcept { return hi - lo; }
  bool is_point() const noexcept { return lo == hi; }
  bool contains(double x, double tol = 0.0) const noexcept {
    return x >= lo - tol && x <= hi + tol;
  }
  bool contains(const Interval& other, double tol = 0.0) const noexcept {
    return other.lo >= lo - tol && other.hi <= hi + tol;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);

}  // namespace ccf
