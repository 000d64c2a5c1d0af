// Gauss-Legendre rules and panel utilities used by the boundary-element
// assembly and the spectral/line integrations.
#pragma once

#include <functional>
#include <vector>

#include "casbem/types.hpp"

namespace casbem {

struct QuadRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// n-point Gauss-Legendre rule on [-1, 1]; cached per n, thread-safe.
const QuadRule& gauss_legendre(int n);

// Nodes/weights of the n-point rule mapped to [a, b].
QuadRule gauss_legendre_on(int n, double a, double b);

// Composite rule: `panels` equal panels on [a, b], n points each.
QuadRule composite_gauss(int n, int panels, double a, double b);

// Panels on [0, qmax] whose widths double away from zero:
// [0, q1], [q1, 2 q1], [2 q1, 4 q1], ... with q1 = qmax / 2^(panels-1).
// Resolves integrands that vary fastest near the origin.
std::vector<double> doubling_panel_edges(int panels, double qmax);

// Nodes/weights for an integral over [a, b] with an integrable
// (log-type) singularity at the endpoint `sing_at` (= a or b):
// geometric panel grading toward the singular end, n-point Gauss per
// panel. `scale_floor` stops the grading once panels are smaller than
// it (0 grades all the way to ~1e-14*(b-a)).
QuadRule graded_nodes(double a, double b, double sing_at, int n = 8,
                      double scale_floor = 0.0);

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        double sing_at, int n = 8, double scale_floor = 0.0);

}  // namespace casbem
