// Free-space fundamental solution of the 2D modified Helmholtz operator
// (Delta - mu^2) and its first and mixed second derivatives.
//
// Sign convention: g0(mu, x, y) = -K0(mu |x-y|) / (2 pi), so that
// (Delta - mu^2) g0 = delta(x - y) exactly. The renormalized Green
// function used downstream is G_ren = G - g0.
#pragma once

#include "casbem/types.hpp"

namespace casbem {

// Spectral parameter mu = sqrt(q^2 + m^2) > 0. mu = 0 is excluded: the
// massless zero-frequency kernel is logarithmically unbounded, and every
// spectral quadrature rule in this project is open at q = 0.
struct SpectralParameter {
  double mu;

  explicit SpectralParameter(double mu_) : mu(mu_) {
    if (!(mu > 0.0)) throw domain_error("SpectralParameter: mu must be positive");
  }
  static SpectralParameter from_q(double q, double mass) {
    return SpectralParameter(std::sqrt(q * q + mass * mass));
  }
};

struct KernelDerivs {
  double value;        // g0
  Vec2 grad_x;         // d/dx_i g0
  Vec2 grad_y;         // d/dy_j g0 (= -grad_x)
  Mat2 mixed;          // d/dx_i d/dy_j g0
};

double g0(SpectralParameter mu, const Vec2& x, const Vec2& y);

KernelDerivs g0_derivs(SpectralParameter mu, const Vec2& x, const Vec2& y);

// Scalar pieces of the kernel as functions of the separation r = |x-y|;
// used by the assembly inner loops where the direction is factored out.
//   value(r)   = -K0(mu r) / (2 pi)
//   radial(r)  = mu K1(mu r) / (2 pi r)   [grad_y = radial * (y - x)]
double g0_value(SpectralParameter mu, double r);
double g0_radial(SpectralParameter mu, double r);

}  // namespace casbem
