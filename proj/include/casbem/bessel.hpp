// Modified Bessel functions of the second kind K0, K1, K2 for positive
// real arguments. Minimax rational approximations (Russon--Blair form,
// double-precision coefficients); relative error below 1e-15 across the
// supported range, which comfortably meets the 1e-10 contract of the
// kernel layer.
#pragma once

namespace casbem {

// K0(x), x > 0. Underflows to 0 for x beyond the exponential range.
double bessel_k0(double x);

// K1(x), x > 0.
double bessel_k1(double x);

// K2(x) = K0(x) + 2 K1(x)/x, x > 0.
double bessel_k2(double x);

// K_order(x) for order in {0, 1, 2}. Throws domain_error for x <= 0 or
// an unsupported order.
double bessel_k(int order, double x);

// exp(x) * K0(x) and exp(x) * K1(x); stay representable for large x.
double bessel_k0_scaled(double x);
double bessel_k1_scaled(double x);

}  // namespace casbem
