#include "ccf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ccf/errors.hpp"

namespace ccf {

MonomialPoly MonomialPoly::constant(std::size_t variables, double c) {
  MonomialPoly p(variables);
  p.add_term(c, Exponents(variables, 0u));
  return p;
}

MonomialPoly MonomialPoly::variable(std::size_t variables, std::size_t index, double c) {
  if (index >= variables) throw DimensionError("variable index out of range");
  MonomialPoly p(variables);
  Exponents e(variables, 0u);
  e[index] = 1;
  p.add_term(c, std::move(e));
  return p;
}

void MonomialPoly::check_arity(std::size_t n) const {
  if (n != variables_) {
    throw DimensionError("polynomial in " + std::to_string(variables_) +
                         " variables used with " + std::to_string(n));
  }
}

void MonomialPoly::add_term(double coefficient, Exponents exponents) {
  check_arity(exponents.size());
  if (coefficient == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

unsigned MonomialPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  }
  return d;
}

Exponents MonomialPoly::max_exponents() const {
  Exponents m(variables_, 0u);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < variables_; ++i) m[i] = std::max(m[i], e[i]);
  }
  return m;
}

double MonomialPoly::evaluate(std::span<const double> theta) const {
  check_arity(theta.size());
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c;
    for (std::size_t i = 0; i < variables_; ++i) {
      if (e[i] != 0) term *= std::pow(theta[i], static_cast<int>(e[i]));
    }
    sum += term;
  }
  return sum;
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& other) {
  check_arity(other.variables_);
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

MonomialPoly& MonomialPoly::operator*=(double scale) {
  if (scale == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scale;
  return *this;
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
  a.check_arity(b.variables_);
  MonomialPoly out(a.variables_);
  Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(ca * cb, e);
    }
  }
  return out;
}

}  // namespace ccf
