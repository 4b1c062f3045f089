#include "kpzlab/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>

namespace kpzlab {

namespace {

// Legendre P_n and P_n' at x, by upward recurrence.
void legendre(int n, long double x, long double* p, long double* dp) {
  long double p0 = 1.0L, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const long double pk = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  *p = p1;
  *dp = n * (x * p1 - p0) / (x * x - 1.0L);
}

std::string cache_path(int order) {
  const char* dir = std::getenv("KPZLAB_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::ostringstream os;
  os << dir << "/gl_" << order << ".txt";
  return os.str();
}

bool load_cached(int order, QuadratureRule* rule) {
  const std::string path = cache_path(order);
  if (path.empty()) return false;
  std::FILE* f = std::fopen(path.c_str(), "r");
  if (!f) return false;
  rule->nodes.assign(order, 0.0);
  rule->weights.assign(order, 0.0);
  bool ok = true;
  for (int i = 0; i < order && ok; ++i)
    ok = std::fscanf(f, "%la %la", &rule->nodes[i], &rule->weights[i]) == 2;
  std::fclose(f);
  return ok;
}

void store_cached(int order, const QuadratureRule& rule) {
  const std::string path = cache_path(order);
  if (path.empty()) return;
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) return;
  for (int i = 0; i < order; ++i)
    std::fprintf(f, "%la %la\n", rule.nodes[i], rule.weights[i]);
  std::fclose(f);
}

QuadratureRule compute_rule(int order) {
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);
  const int m = order / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-angle seed, then Newton in long double.
    long double x = std::cos(pi() * (i + 0.75) / (order + 0.5));
    long double p, dp;
    for (int it = 0; it < 64; ++it) {
      legendre(order, x, &p, &dp);
      const long double dx = p / dp;
      x -= dx;
      if (std::fabs((double)dx) < 1e-19) break;
    }
    legendre(order, x, &p, &dp);
    const double w = (double)(2.0L / ((1.0L - x * x) * dp * dp));
    // Mirror so nodes and weights are symmetric to the last bit.
    rule.nodes[order - 1 - i] = (double)x;
    rule.nodes[i] = -(double)x;
    rule.weights[i] = rule.weights[order - 1 - i] = w;
  }
  if (order % 2) {
    long double p, dp;
    legendre(order, 0.0L, &p, &dp);
    rule.nodes[m] = 0.0;
    rule.weights[m] = (double)(2.0L / (dp * dp));
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre_rule(int order) {
  if (order < 1 || order > 2000)
    throw ParameterError("gauss_legendre_rule: order must be in [1, 2000]");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return *it->second;
  auto rule = std::make_unique<QuadratureRule>();
  if (!load_cached(order, rule.get())) {
    *rule = compute_rule(order);
    store_cached(order, *rule);
  } else {
    rule->order = order;
  }
  auto* ptr = rule.get();
  cache.emplace(order, std::move(rule));
  return *ptr;
}

namespace {

double panel_sum(const std::function<double(double)>& f, double a, double b,
                 const QuadratureRule& rule) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double x = c + h * rule.nodes[i];
    const double v = f(x);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "integrand returned non-finite value at x = " << x;
      throw EvaluationError(os.str());
    }
    s += rule.weights[i] * v;
  }
  return h * s;
}

double composite(const std::function<double(double)>& f, double a, double b,
                 int panels, const QuadratureRule& rule) {
  double s = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double pa = a + (b - a) * k / panels;
    const double pb = a + (b - a) * (k + 1) / panels;
    s += panel_sum(f, pa, pb, rule);
  }
  return s;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int order) {
  if (!(a < b)) throw ParameterError("integrate: requires a < b");
  if (panels < 1) throw ParameterError("integrate: panels must be positive");
  return composite(f, a, b, panels, gauss_legendre_rule(order));
}

IntegrationResult integrate_with_error(const std::function<double(double)>& f,
                                       double a, double b, int panels, int order) {
  const QuadratureRule& rule = gauss_legendre_rule(order);
  IntegrationResult out;
  out.value = composite(f, a, b, panels, rule);
  const double coarse = composite(f, a, b, std::max(1, panels / 2), rule);
  out.error_estimate = std::fabs(out.value - coarse) +
                       4.0 * std::numeric_limits<double>::epsilon() *
                           (std::fabs(out.value) + 1.0);
  return out;
}

double integrate_decaying(const std::function<double(double)>& f, double a,
                          double decay_rate, double tol) {
  if (!(decay_rate > 0.0)) throw ParameterError("integrate_decaying: decay_rate must be positive");
  if (!(tol > 0.0)) throw ParameterError("integrate_decaying: tol must be positive");
  const QuadratureRule& rule = gauss_legendre_rule(12);
  const double window = std::log(1e6) / decay_rate;
  const int max_windows = 500;
  double acc = 0.0;
  double peak = 0.0;
  for (int k = 0; k < max_windows; ++k) {
    const double wa = a + k * window, wb = a + (k + 1) * window;
    double piece = 0.0;
    for (int p = 0; p < 10; ++p)
      piece += panel_sum(f, wa + (wb - wa) * p / 10.0, wa + (wb - wa) * (p + 1) / 10.0, rule);
    acc += piece;
    peak = std::max(peak, std::fabs(piece));
    // Stop once a window is negligible and the scan is clearly decaying;
    // the geometric tail beyond it is < tol * 1e-6 / (1 - 1e-6).
    if (k >= 1 && std::fabs(piece) <= 0.5 * tol * std::max(1.0, std::fabs(acc)) &&
        std::fabs(piece) <= 0.5 * peak)
      return acc;
  }
  throw ConvergenceError("integrate_decaying: integrand does not decay at the supplied rate");
}

std::vector<double> graded_breakpoints(double a, double b,
                                       const std::function<double(double)>& width_fn) {
  if (!(a < b)) throw ParameterError("graded_breakpoints: requires a < b");
  std::vector<double> pts{a};
  const double min_w = 1e-9 * (b - a);
  double x = a;
  while (x < b) {
    double w = width_fn(x);
    if (!(w > min_w)) w = min_w;
    if (pts.size() > 4000000) throw ParameterError("graded_breakpoints: panel budget exceeded");
    x = std::min(b, x + w);
    pts.push_back(x);
  }
  return pts;
}

double integrate_over_breakpoints(const std::function<double(double)>& f,
                                  const std::vector<double>& breakpoints, int order) {
  const QuadratureRule& rule = gauss_legendre_rule(order);
  double s = 0.0;
  for (size_t k = 0; k + 1 < breakpoints.size(); ++k)
    s += panel_sum(f, breakpoints[k], breakpoints[k + 1], rule);
  return s;
}

double log_integrate_over_breakpoints(const std::function<double(double)>& log_f,
                                      const std::vector<double>& breakpoints,
                                      int order) {
  const QuadratureRule& rule = gauss_legendre_rule(order);
  double shift = -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    const double a = breakpoints[k], b = breakpoints[k + 1];
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 0; i < rule.order; ++i) {
      const double x = c + h * rule.nodes[i];
      const double lf = log_f(x);
      if (std::isnan(lf)) {
        std::ostringstream os;
        os << "log-integrand returned NaN at x = " << x;
        throw EvaluationError(os.str());
      }
      if (std::isinf(lf) && lf < 0) continue;
      const double lw = lf + std::log(h * rule.weights[i]);
      if (lw <= shift) {
        acc += std::exp(lw - shift);
      } else {
        acc = acc * std::exp(shift - lw) + 1.0;
        shift = lw;
      }
    }
  }
  if (acc == 0.0) return -std::numeric_limits<double>::infinity();
  return shift + std::log(acc);
}

}  // namespace kpzlab
