#pragma once

#include <stdexcept>
#include <string>

namespace minrep {

/// Base of every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument shape or index (e.g. l > a).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain (t not in Omega, off-cone point, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Series failed to converge within the configured term cap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Integrand produced NaN or Inf at a quadrature node.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Quasi-polynomial operation left the representable class.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Resampling requested outside the support of a gridded function.
class ExtrapolationError : public Error {
 public:
  using Error::Error;
};

/// Group element lies in the opposite parabolic subgroup; no Bruhat cell.
class InParabolicError : public Error {
 public:
  using Error::Error;
};

/// Feature outside the supported parameter range (e.g. m = 2 angular ops).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Solver failed internally (eigenvalue iteration, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace minrep
