#pragma once

#include <stdexcept>
#include <string>

namespace ccf {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector lengths disagree with the system size.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of the operation (negative rate,
/// off-simplex vector, empty model, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A hyperparameter box has no point in common with the simplex.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccf
