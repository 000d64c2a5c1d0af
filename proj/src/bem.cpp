#include "casbem/bem.hpp"

#include <cmath>

#include "casbem/bessel.hpp"
#include "casbem/quadrature.hpp"

namespace casbem {
namespace {

constexpr double two_pi = 2.0 * M_PI;

}  // namespace

GreenOperator::GreenOperator(const BoundaryMesh& mesh, SpectralParameter mu,
                             BemOptions opts)
    : mesh_(mesh), mu_(mu), opts_(opts) {
  if (mesh_.elements.empty()) throw domain_error("bem: empty mesh");
  if (opts_.basis_degree < 0 || opts_.basis_degree > 2)
    throw domain_error("bem: basis degree must be 0, 1 or 2");
  assemble();
}

void GreenOperator::assemble() {
  const int n = size();

  stencils_.resize(n);
  for (int j = 0; j < n; ++j) {
    const Element& e = mesh_.elements[j];
    Stencil& st = stencils_[j];
    if (opts_.basis_degree >= 1 && mesh_.stencil_eligible(j)) {
      st.count = 3;
      st.idx[0] = e.prev;
      st.idx[1] = j;
      st.idx[2] = e.next;
      st.t[0] = mesh_.elements[e.prev].arc_mid - e.arc_mid;
      st.t[1] = 0.0;
      st.t[2] = mesh_.elements[e.next].arc_mid - e.arc_mid;
    } else {
      st.count = 1;
      st.idx[0] = j;
      st.t[0] = 0.0;
    }
  }

  A_ = MatX::Zero(n, n);
  for (int c = 0; c < n; ++c) {
    VecX row = VecX::Zero(n);
    accumulate_point(mesh_.elements[c].mid, c, &row, nullptr, nullptr);
    A_.row(c) = row;
  }

  lu_.compute(A_);
  const double rc = lu_.rcond();
  cond_ = (rc > 0.0) ? 1.0 / rc : std::numeric_limits<double>::infinity();
  if (!std::isfinite(cond_))
    throw numerical_error("bem: collocation matrix is singular");
}

// Evaluates the density basis weights of element j at local arc offset t.
// Weights are returned in the stencil's index order.
namespace {

void basis_weights(int degree, const double* tn, int count, double t, double* w) {
  if (count == 1) {
    w[0] = 1.0;
    return;
  }
  if (degree == 1) {
    const double slope = t / (tn[2] - tn[0]);
    w[0] = -slope;
    w[1] = 1.0;
    w[2] = slope;
    return;
  }
  // degree 2: Lagrange through (tn[0], tn[1]=0, tn[2])
  w[0] = (t - tn[1]) * (t - tn[2]) / ((tn[0] - tn[1]) * (tn[0] - tn[2]));
  w[1] = (t - tn[0]) * (t - tn[2]) / ((tn[1] - tn[0]) * (tn[1] - tn[2]));
  w[2] = (t - tn[0]) * (t - tn[1]) / ((tn[2] - tn[0]) * (tn[2] - tn[1]));
}

}  // namespace

void GreenOperator::accumulate_point(const Vec2& p, int self, VecX* row, VecX* d1,
                                     VecX* d2) const {
  const int n = size();
  const double m = mu_.mu;
  double w3[3];

  for (int j = 0; j < n; ++j) {
    const Element& e = mesh_.elements[j];
    const Stencil& st = stencils_[j];
    const double h = 0.5 * e.len;

    QuadRule rule;
    if (self == j) {
      // Collocation point at the element midpoint: kernel singularity
      // at t = 0 exactly. Grade both halves toward it.
      rule = graded_nodes(-h, 0.0, 0.0, opts_.quad_points);
      QuadRule right = graded_nodes(0.0, h, 0.0, opts_.quad_points);
      rule.nodes.insert(rule.nodes.end(), right.nodes.begin(), right.nodes.end());
      rule.weights.insert(rule.weights.end(), right.weights.begin(),
                          right.weights.end());
    } else {
      const double dist = point_segment_distance(p, e.a, e.b);
      if (dist < opts_.near_factor * e.len) {
        // Near-singular: grade toward the projection of p on the element.
        const double tp =
            std::clamp((p - e.mid).dot(e.tangent), -h, h);
        const double floor = dist / 3.0;
        rule = graded_nodes(-h, tp, tp, opts_.quad_points, floor);
        QuadRule right = graded_nodes(tp, h, tp, opts_.quad_points, floor);
        rule.nodes.insert(rule.nodes.end(), right.nodes.begin(), right.nodes.end());
        rule.weights.insert(rule.weights.end(), right.weights.begin(),
                            right.weights.end());
      } else {
        rule = gauss_legendre_on(opts_.quad_points, -h, h);
      }
    }

    for (size_t k = 0; k < rule.nodes.size(); ++k) {
      const double t = rule.nodes[k];
      const double wq = rule.weights[k];
      const Vec2 xi = e.mid + t * e.tangent;
      const Vec2 diff = p - xi;
      const double r = diff.norm();
      if (r < 1e-15) continue;  // immeasurable sliver next to the singularity
      const double z = m * r;
      const double kern = -bessel_k0(z) / two_pi;
      basis_weights(this, opts_.basis_degree, st.t, st.count, t, w3);
      if (row)
        for (int q = 0; q < st.count; ++q) (*row)[st.idx[q]] += wq * w3[q] * kern;
      if (d1 || d2) {
        const double radial = m * bessel_k1(z) / (two_pi * r * r);
        for (int q = 0; q < st.count; ++q) {
          const double f = wq * w3[q] * radial;
          if (d1) (*d1)[st.idx[q]] += f * diff.x();
          if (d2) (*d2)[st.idx[q]] += f * diff.y();
        }
      }
    }
  }
}

void GreenOperator::check_interior(const Vec2& p, const char* who) const {
  const double d = mesh_.distance_to(p);
  if (d < mesh_.target_size)
    throw domain_error(std::string(who) +
                       ": point closer to the boundary than one element length");
}

VecX GreenOperator::boundary_data(const Vec2& x) const {
  const int n = size();
  VecX b(n);
  for (int c = 0; c < n; ++c)
    b[c] = bessel_k0(mu_.mu * (x - mesh_.elements[c].mid).norm()) / two_pi;
  return b;
}

VecX GreenOperator::influence_row(const Vec2& y) const {
  VecX row = VecX::Zero(size());
  accumulate_point(y, -1, &row, nullptr, nullptr);
  return row;
}

VecX GreenOperator::solve(const VecX& rhs) const {
  VecX z = lu_.solve(rhs);
  z += lu_.solve(rhs - A_ * z);  // one step of iterative refinement
  return z;
}

double GreenOperator::solve_residual(const VecX& rhs) const {
  const VecX z = solve(rhs);
  return (A_ * z - rhs).lpNorm<Eigen::Infinity>() / rhs.lpNorm<Eigen::Infinity>();
}

VecX GreenOperator::solve_density(const Vec2& source) const {
  check_interior(source, "solve_density");
  return solve(boundary_data(source));
}

double GreenOperator::eval_gren(const Vec2& x, const Vec2& y) const {
  check_interior(x, "eval_gren");
  check_interior(y, "eval_gren");
  return influence_row(y).dot(solve_density(x));
}

GreenCoincidence GreenOperator::coincidence(const Vec2& x) const {
  check_interior(x, "coincidence");
  const int n = size();
  const double m = mu_.mu;

  Eigen::Matrix<double, Eigen::Dynamic, 3> rhs(n, 3);
  for (int c = 0; c < n; ++c) {
    const Vec2 diff = x - mesh_.elements[c].mid;
    const double r = diff.norm();
    const double z = m * r;
    rhs(c, 0) = bessel_k0(z) / two_pi;  // b_c = -g0
    const double radial = m * bessel_k1(z) / (two_pi * r * r);
    // d/dx_i b_c = -d/dx_i g0(x, xi_c) = -radial * diff_i
    rhs(c, 1) = -radial * diff.x();
    rhs(c, 2) = -radial * diff.y();
  }
  Eigen::Matrix<double, Eigen::Dynamic, 3> z = lu_.solve(rhs);
  z += lu_.solve(rhs - A_ * z);

  VecX k = VecX::Zero(n), dk1 = VecX::Zero(n), dk2 = VecX::Zero(n);
  accumulate_point(x, -1, &k, &dk1, &dk2);

  GreenCoincidence out;
  out.value = k.dot(z.col(0));
  out.mixed(0, 0) = dk1.dot(z.col(1));
  out.mixed(0, 1) = dk2.dot(z.col(1));
  out.mixed(1, 0) = dk1.dot(z.col(2));
  out.mixed(1, 1) = dk2.dot(z.col(2));
  return out;
}

}  // namespace casbem
