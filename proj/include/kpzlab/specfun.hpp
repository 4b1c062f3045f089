#pragma once

#include "kpzlab/common.hpp"

namespace kpzlab {

struct AiryValue {
  double x;
  double ai;
  double ai_prime;
};

/// Ai(x) and Ai'(x) to double precision.
/// Maclaurin series on |x| <= 6, Taylor marching from asymptotic anchors on
/// 6 < |x| <= 12, Poincare expansions beyond. Ai underflows to 0 for
/// x >~ 104; that is accepted behaviour.
AiryValue airy_pair(double x);

/// aisq(y) = Ai'(y)^2 - y Ai(y)^2 = \int_y^inf Ai^2(x) dx.
double aisq(double y);

/// log(aisq(y)); switches to the asymptotic tail form where aisq would
/// underflow. Needed by the log-space Laplace integrals.
double log_aisq(double y);

/// g(y) = (1/3)(2 y^2 Ai^2 - 2 y Ai'^2 - Ai Ai') = \int_y^inf aisq(r) dr.
double aisq_tail_integral(double y);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

namespace detail {
// The two underlying schemes, exposed for the cross-validation tests.
AiryValue airy_series(double x);       // Maclaurin, usable to |x| ~ 9
AiryValue airy_asymptotic(double x);   // Poincare, usable for |x| >~ 5
// High-order Taylor stepping of y'' = x y from a known anchor value.
AiryValue airy_ode_march(const AiryValue& anchor, double target, double max_step);
}  // namespace detail

}  // namespace kpzlab
