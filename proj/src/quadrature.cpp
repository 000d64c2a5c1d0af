#include "casbem/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace casbem {
namespace {

// Newton iteration on P_n with the Chebyshev-like initial guess; nodes
// accurate to machine precision for the orders used here (n <= 128).
QuadRule compute_gauss_legendre(int n) {
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const QuadRule& gauss_legendre(int n) {
  if (n < 1 || n > 128) throw domain_error("gauss_legendre: order out of range");
  static std::mutex mtx;
  static std::map<int, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

QuadRule gauss_legendre_on(int n, double a, double b) {
  const QuadRule& base = gauss_legendre(n);
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * base.nodes[i];
    rule.weights[i] = half * base.weights[i];
  }
  return rule;
}

QuadRule composite_gauss(int n, int panels, double a, double b) {
  if (panels < 1) throw domain_error("composite_gauss: need at least one panel");
  QuadRule rule;
  rule.nodes.reserve(static_cast<size_t>(n) * panels);
  rule.weights.reserve(static_cast<size_t>(n) * panels);
  const double dw = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    QuadRule panel = gauss_legendre_on(n, a + p * dw, a + (p + 1) * dw);
    rule.nodes.insert(rule.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    rule.weights.insert(rule.weights.end(), panel.weights.begin(), panel.weights.end());
  }
  return rule;
}

std::vector<double> doubling_panel_edges(int panels, double qmax) {
  if (panels < 2) throw domain_error("doubling_panel_edges: need >= 2 panels");
  std::vector<double> edges(panels + 1);
  edges[0] = 0.0;
  double w = qmax / std::pow(2.0, panels - 1);
  for (int i = 1; i <= panels; ++i) {
    edges[i] = w;
    w *= 2.0;
  }
  edges[panels] = qmax;  // guard against rounding
  return edges;
}

QuadRule graded_nodes(double a, double b, double sing_at, int n, double scale_floor) {
  QuadRule out;
  const double len = b - a;
  if (len <= 0.0) return out;
  const bool at_left = std::abs(sing_at - a) < std::abs(sing_at - b);
  const double floor_len = std::max(scale_floor, 1e-14 * len);
  // Geometric breakpoints measured from the singular end.
  std::vector<double> d{len};
  constexpr double ratio = 0.15;
  while (d.back() * ratio > floor_len && d.size() < 24) d.push_back(d.back() * ratio);
  d.push_back(0.0);  // innermost sliver reaches the endpoint
  for (size_t i = 0; i + 1 < d.size(); ++i) {
    const double lo = at_left ? a + d[i + 1] : b - d[i];
    const double hi = at_left ? a + d[i] : b - d[i + 1];
    QuadRule panel = gauss_legendre_on(n, lo, hi);
    out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    out.weights.insert(out.weights.end(), panel.weights.begin(), panel.weights.end());
  }
  return out;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        double sing_at, int n, double scale_floor) {
  const QuadRule rule = graded_nodes(a, b, sing_at, n, scale_floor);
  double total = 0.0;
  for (size_t k = 0; k < rule.nodes.size(); ++k)
    total += rule.weights[k] * f(rule.nodes[k]);
  return total;
}

}  // namespace casbem
