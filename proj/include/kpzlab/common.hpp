#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace kpzlab {

// Error taxonomy shared by all modules.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// log(1 + e^u), stable for large |u|.
inline double softplus(double u) {
  if (u > 36.0) return u;
  if (u < -36.0) return std::exp(u);
  return std::log1p(std::exp(u));
}

// log(e^a + e^b), stable.
inline double log_add_exp(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

struct SignedLog {
  double log_abs;
  int sign;  // -1, 0, +1
};

inline double pi() { return 3.14159265358979323846; }

}  // namespace kpzlab
