#pragma once

#include <stdexcept>
#include <string>

namespace cornu {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the documented domain (non-finite argument, bad range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested exactly at a removable or essential singularity,
// e.g. the z = 0 endpoint of operators that divide by z.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Evaluation inside the guard band around a pole of tan/sec factors or of
// the general Riccati solution.  Carries the offending coordinate.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, double where)
      : Error(what), where_(where) {}
  double where() const { return where_; }

 private:
  double where_;
};

// Curve point where the curvature denominator (speed) vanishes.
class DegenerateCurveError : public Error {
 public:
  using Error::Error;
};

// Iterative scheme exhausted its budget before reaching tolerance.
// Carries the best estimate available when the budget ran out.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  double best_estimate() const { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace cornu
