// Boundary-element solver for the renormalized Green function.
//
// G_ren = G - g0 solves the homogeneous modified Helmholtz equation in
// the gap with Dirichlet data G_ren(x, xi) = -g0(mu, x, xi) on the
// plates. It is represented as a single-layer potential
//
//   G_ren(x, y) = sum_j  int_elem_j  rho_j(t; sigma) g0(mu, y, xi_j(t)) dt
//
// where the density rho_j over element j is a low-degree polynomial in
// arc length reconstructed from the element's own coefficient and its
// neighbours' (degree 2: Lagrange through the three midpoints; degree 1:
// the element value plus the neighbour slope; degree 0: constant).
// Elements at curve ends and at corners fall back to degree 0. Midpoint
// collocation determines sigma; in discrete form
//
//   G_ren(x, y) = k(y)^T A^{-1} b(x),   b_c(x) = -g0(mu, x, xi_c),
//
// and the mixed second derivatives at coincidence are
// (d_yj k)^T A^{-1} (d_xi b) with analytic kernel derivatives on both
// factors -- no finite differencing in the production path.
#pragma once

#include <memory>

#include <Eigen/LU>

#include "casbem/geometry.hpp"
#include "casbem/green.hpp"
#include "casbem/kernel.hpp"
#include "casbem/types.hpp"

namespace casbem {

struct BemOptions {
  int basis_degree = 2;        // density reconstruction degree, in {0, 1, 2}
  int quad_points = 8;         // Gauss points per regular element integral
  double near_factor = 1.5;    // graded quadrature when dist < factor * elem len
  double cond_limit = 1e12;    // operator flagged unusable beyond this
};

class GreenOperator : public GreenEvaluator {
 public:
  GreenOperator(const BoundaryMesh& mesh, SpectralParameter mu, BemOptions opts);

  const BoundaryMesh& mesh() const { return mesh_; }
  SpectralParameter mu() const { return mu_; }
  int size() const { return static_cast<int>(mesh_.elements.size()); }

  // 1-norm condition estimate from the LU factorization.
  double condition_estimate() const { return cond_; }
  bool usable() const { return cond_ < opts_.cond_limit; }

  // Collocation solve for the density induced by a unit source at
  // `source`; the source must keep a distance of at least one element
  // length from the plates.
  VecX solve_density(const Vec2& source) const;

  // G_ren(x, y) at interior points (smooth at x = y).
  double eval_gren(const Vec2& x, const Vec2& y) const;

  // Coincidence value and mixed derivative matrix at x.
  GreenCoincidence coincidence(const Vec2& x) const override;

  // Building blocks, exposed for validation:
  VecX boundary_data(const Vec2& x) const;                     // b(x)
  VecX influence_row(const Vec2& y) const;                     // k(y)
  VecX solve(const VecX& rhs) const;                           // A^{-1} rhs w/ refinement
  double solve_residual(const VecX& rhs) const;                // |A z - rhs|_inf / |rhs|_inf
  const MatX& matrix() const { return A_; }

 private:
  void assemble();
  void check_interior(const Vec2& p, const char* who) const;
  // Accumulates the single-layer integrals over all elements against
  // the point p into row/deriv vectors (pass nullptr to skip derivs).
  void accumulate_point(const Vec2& p, int self, VecX* row, VecX* d1, VecX* d2) const;

  BoundaryMesh mesh_;
  SpectralParameter mu_;
  BemOptions opts_;

  // Per-element reconstruction stencil: column indices and Lagrange
  // node offsets; count = 1 or 3 (degree 1 also uses 3 entries).
  struct Stencil {
    int idx[3];
    double t[3];
    int count;
  };
  std::vector<Stencil> stencils_;

  MatX A_;
  Eigen::PartialPivLU<MatX> lu_;
  double cond_ = 0.0;
};

// Spec-level factory.
inline std::unique_ptr<GreenOperator> assemble(const BoundaryMesh& mesh,
                                               SpectralParameter mu,
                                               int basis_degree = 2) {
  BemOptions opts;
  opts.basis_degree = basis_degree;
  return std::make_unique<GreenOperator>(mesh, mu, opts);
}

// GreenFamily adapter: assembles an operator per spectral node.
class BemGreenFamily : public GreenFamily {
 public:
  BemGreenFamily(BoundaryMesh mesh, BemOptions opts)
      : mesh_(std::move(mesh)), opts_(opts) {}
  std::unique_ptr<GreenEvaluator> evaluator(SpectralParameter mu) const override {
    return std::make_unique<GreenOperator>(mesh_, mu, opts_);
  }
  const BoundaryMesh& mesh() const { return mesh_; }

 private:
  BoundaryMesh mesh_;
  BemOptions opts_;
};

}  // namespace casbem
