#pragma once

#include <stdexcept>
#include <string>

namespace twogap {

/// Invalid input: a domain, argument or point outside the accepted range.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature did not settle before the node-doubling cap.
class QuadratureError : public ConvergenceError {
 public:
  QuadratureError(const std::string& what, double previous, double last)
      : ConvergenceError(what), previous_(previous), last_(last) {}

  double previous_estimate() const noexcept { return previous_; }
  double last_estimate() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

/// The extended-precision Remez solve lost alternation; more digits are needed.
class PrecisionError : public ConvergenceError {
 public:
  explicit PrecisionError(const std::string& what) : ConvergenceError(what) {}
};

}  // namespace twogap
