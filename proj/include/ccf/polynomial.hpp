#pragma once

/// @file polynomial.hpp
/// Sparse multivariate polynomials in the alpha-factors theta_1..theta_k.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ccf {

/// Exponent multi-index (p_1, ..., p_k).
using Exponents = std::vector<unsigned>;

/// Polynomial sum_i c_i prod_j theta_j^{p_ij}, stored as a map from
/// exponent vector to coefficient. Exponent vectors are unique and exactly
/// zero coefficients are dropped.
class MonomialPoly {
 public:
  explicit MonomialPoly(std::size_t variables) : variables_(variables) {}

  /// The constant polynomial c.
  static MonomialPoly constant(std::size_t variables, double c);

  /// c * theta_index (0-based index).
  static MonomialPoly variable(std::size_t variables, std::size_t index, double c = 1.0);

  /// Adds c * theta^exponents, merging with an existing term.
  void add_term(double coefficient, Exponents exponents);

  std::size_t variables() const noexcept { return variables_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Highest total degree over all terms; zero for the empty polynomial.
  unsigned degree() const;

  /// Highest exponent of each variable.
  Exponents max_exponents() const;

  const std::map<Exponents, double>& terms() const noexcept { return terms_; }

  double evaluate(std::span<const double> theta) const;

  MonomialPoly& operator+=(const MonomialPoly& other);
  MonomialPoly& operator*=(double scale);
  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator*(MonomialPoly a, double scale) { return a *= scale; }
  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

 private:
  void check_arity(std::size_t n) const;

  std::size_t variables_;
  std::map<Exponents, double> terms_;
};

}  // namespace ccf
