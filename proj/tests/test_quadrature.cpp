#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kpzlab/quadrature.hpp"
#include "kpzlab/specfun.hpp"

using namespace kpzlab;

TEST_CASE("closed-form rules for orders 1 and 2") {
  const QuadratureRule& r1 = gauss_legendre_rule(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  const QuadratureRule& r2 = gauss_legendre_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rule invariants: symmetry, positivity, weight sum") {
  for (int n : {1, 2, 3, 5, 8, 13, 20, 33, 64, 101}) {
    const QuadratureRule& r = gauss_legendre_rule(n);
    REQUIRE((int)r.nodes.size() == n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += r.weights[i];
      CHECK(r.weights[i] > 0.0);
      CHECK(r.nodes[i] == -r.nodes[n - 1 - i]);       // bitwise symmetric
      CHECK(r.weights[i] == r.weights[n - 1 - i]);
      if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
    }
    CHECK(std::fabs(sum - 2.0) < 1e-14);
  }
}

TEST_CASE("exactness up to degree 2n-1") {
  for (int n : {1, 2, 3, 6, 12, 25, 40, 64}) {
    const QuadratureRule& r = gauss_legendre_rule(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], d);
      const double exact = (d % 2) ? 0.0 : 2.0 / (d + 1);
      CHECK(std::fabs(s - exact) < 1e-13);
    }
  }
}

TEST_CASE("order-64 rule reproduces x^126") {
  const QuadratureRule& r = gauss_legendre_rule(64);
  double s = 0.0;
  for (int i = 0; i < 64; ++i) s += r.weights[i] * std::pow(r.nodes[i], 126);
  CHECK(std::fabs(s - 2.0 / 127.0) < 1e-13);
}

TEST_CASE("rule generation is deterministic") {
  const QuadratureRule& a = gauss_legendre_rule(37);
  QuadratureRule b;
  b.order = 37;
  // Re-request through the cache; must be the identical object contents.
  const QuadratureRule& c = gauss_legendre_rule(37);
  for (int i = 0; i < 37; ++i) {
    CHECK(a.nodes[i] == c.nodes[i]);
    CHECK(a.weights[i] == c.weights[i]);
  }
  CHECK_THROWS_AS(gauss_legendre_rule(0), ParameterError);
  CHECK_THROWS_AS(gauss_legendre_rule(2001), ParameterError);
}

TEST_CASE("integrate basics") {
  CHECK(integrate([](double x) { return x * x; }, 0, 1, 4, 8) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0, 50, 50, 20) ==
        doctest::Approx(1.0 - std::exp(-50.0)).epsilon(1e-12));
  const double v = integrate([](double x) { return airy_pair(x).ai * airy_pair(x).ai; },
                             0, 40, 60, 16);
  CHECK(v == doctest::Approx(aisq(0.0)).epsilon(1e-10));
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1, 0, 1, 4), ParameterError);
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0, 1, 1, 4),
                  EvaluationError);
}

TEST_CASE("doubling panels stays within the reported error estimate") {
  auto smooth = {
      std::function<double(double)>([](double x) { return std::exp(-x * x); }),
      std::function<double(double)>([](double x) { return 1.0 / (1.0 + x * x); }),
      std::function<double(double)>([](double x) { return std::sin(3 * x) + 2.0; }),
  };
  for (const auto& f : smooth) {
    for (int panels : {2, 4, 8}) {
      IntegrationResult r = integrate_with_error(f, -2, 3, panels, 6);
      const double refined = integrate(f, -2, 3, 2 * panels, 6);
      CHECK(std::fabs(refined - r.value) <= 10.0 * r.error_estimate);
    }
  }
}

TEST_CASE("integrate_decaying handles exponential tails") {
  CHECK(integrate_decaying([](double x) { return std::exp(-x); }, 0, 1.0, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // r -> e^{r t} aisq(t^{2/3} r) on r >= q^2/4 with t = 4, q = 1, against a
  // fine trapezoid oracle.
  const double t = 4.0, q = 1.0;
  auto f = [&](double r) { return std::exp(q * r * t) * aisq(std::pow(t, 2.0 / 3.0) * r); };
  const double a = q * q / 4.0;
  const double val = integrate_decaying(f, a, 1.0, 1e-10);
  const int n = 1000000;
  const double b = a + 25.0;
  double trapz = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) trapz += f(a + (b - a) * i / n);
  trapz *= (b - a) / n;
  CHECK(val == doctest::Approx(trapz).epsilon(1e-8));

  CHECK_THROWS_AS(integrate_decaying([](double) { return 1.0; }, 0, 1.0, 1e-12),
                  ConvergenceError);
  CHECK_THROWS_AS(integrate_decaying([](double x) { return std::exp(-x); }, 0, -1.0, 1e-12),
                  ParameterError);
}

TEST_CASE("graded breakpoints and panel integration") {
  auto width = [](double x) { return x < 0 ? pi() / std::sqrt(std::max(1.0, -x)) : 1.0; };
  auto br = graded_breakpoints(-40, 5, width);
  CHECK(br.front() == -40.0);
  CHECK(br.back() == 5.0);
  for (size_t i = 1; i < br.size(); ++i) CHECK(br[i] > br[i - 1]);
  // Oscillatory integral resolved on the graded grid: int Ai(x)^2 over [-40, 5]
  // equals aisq(-40) - aisq(5).
  auto f = [](double x) { const AiryValue a = airy_pair(x); return a.ai * a.ai; };
  const double v = integrate_over_breakpoints(f, br, 16);
  CHECK(v == doctest::Approx(aisq(-40.0) - aisq(5.0)).epsilon(1e-11));
}

TEST_CASE("log-space panel integration matches linear where comparable") {
  auto lf = [](double x) { return -x * x; };
  auto br = graded_breakpoints(-8, 8, [](double) { return 0.5; });
  const double lv = log_integrate_over_breakpoints(lf, br, 12);
  CHECK(lv == doctest::Approx(0.5 * std::log(pi())).epsilon(1e-13));
  // Huge exponents stay finite in log space.
  auto lf2 = [](double x) { return 5000.0 - x * x; };
  const double lv2 = log_integrate_over_breakpoints(lf2, br, 12);
  CHECK(lv2 == doctest::Approx(5000.0 + 0.5 * std::log(pi())).epsilon(1e-13));
}
