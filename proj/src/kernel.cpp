#include "casbem/kernel.hpp"

#include <cmath>

#include "casbem/bessel.hpp"

namespace casbem {
namespace {

constexpr double two_pi = 2.0 * M_PI;
constexpr double coincidence_tol = 1e-14;

double separation(const Vec2& x, const Vec2& y) {
  const double r = (x - y).norm();
  if (r < coincidence_tol)
    throw domain_error("kernel: coincident evaluation points");
  return r;
}

}  // namespace

double g0_value(SpectralParameter mu, double r) {
  return -bessel_k0(mu.mu * r) / two_pi;
}

double g0_radial(SpectralParameter mu, double r) {
  return mu.mu * bessel_k1(mu.mu * r) / (two_pi * r);
}

double g0(SpectralParameter mu, const Vec2& x, const Vec2& y) {
  return g0_value(mu, separation(x, y));
}

KernelDerivs g0_derivs(SpectralParameter mu, const Vec2& x, const Vec2& y) {
  const double r = separation(x, y);
  const double m = mu.mu;
  const double z = m * r;
  const double k0 = bessel_k0(z);
  const double k1 = bessel_k1(z);

  const Vec2 u = (x - y) / r;  // unit separation
  KernelDerivs out;
  out.value = -k0 / two_pi;
  // d/dx_i g0 = (mu/2pi) K1(mu r) u_i
  out.grad_x = (m * k1 / two_pi) * u;
  out.grad_y = -out.grad_x;
  // d/dx_i d/dy_j g0 =
  //   (mu/2pi) [ mu K0 u_i u_j + (K1/r)(2 u_i u_j - delta_ij) ]
  const Mat2 uu = u * u.transpose();
  out.mixed = (m / two_pi) *
              (m * k0 * uu + (k1 / r) * (2.0 * uu - Mat2::Identity()));
  return out;
}

}  // namespace casbem
