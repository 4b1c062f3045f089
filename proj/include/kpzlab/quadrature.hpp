#pragma once

#include <functional>
#include <vector>

#include "kpzlab/common.hpp"

namespace kpzlab {

struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;    // strictly increasing in (-1, 1)
  std::vector<double> weights;  // positive, symmetric, sum to 2
};

/// Gauss-Legendre rule of the given order, cached after first construction.
/// Deterministic: identical bits for identical order. Set KPZLAB_CACHE_DIR to
/// persist rules across processes.
const QuadratureRule& gauss_legendre_rule(int order);

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Composite Gauss-Legendre on [a, b] with uniform panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int order);

/// Same, with an error estimate from comparing against the half-panel result.
IntegrationResult integrate_with_error(const std::function<double(double)>& f,
                                       double a, double b, int panels, int order);

/// Semi-infinite integral of an (eventually) exponentially decaying integrand.
/// decay_rate must lower-bound the true asymptotic rate; it sizes the scan
/// windows. Reported value differs from any further extension by <= tol.
double integrate_decaying(const std::function<double(double)>& f, double a,
                          double decay_rate, double tol);

/// Breakpoints on [a, b] with local panel width width_fn(x) (clamped below by
/// a small fraction of b-a). Used to grade panels to the local Airy
/// wavelength 2*pi/sqrt(|x|) in oscillatory regions.
std::vector<double> graded_breakpoints(double a, double b,
                                       const std::function<double(double)>& width_fn);

double integrate_over_breakpoints(const std::function<double(double)>& f,
                                  const std::vector<double>& breakpoints, int order);

/// log of \int exp(log_f) over the panels; integrand implicitly positive.
/// Accumulated with a running max shift so exponents of order +-1e4 are fine.
double log_integrate_over_breakpoints(const std::function<double(double)>& log_f,
                                      const std::vector<double>& breakpoints,
                                      int order);

}  // namespace kpzlab
