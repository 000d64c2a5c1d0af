#include "casbem/oracle.hpp"

#include <cmath>

#include "casbem/bessel.hpp"

namespace casbem {
namespace {

constexpr double two_pi = 2.0 * M_PI;
constexpr double zeta3 = 1.2020569031595942854;

double side(const PlateLine& plate, const Vec2& p) {
  return (p - plate.point).dot(plate.normal);
}

Vec2 mirror(const PlateLine& plate, const Vec2& p) {
  return p - 2.0 * side(plate, p) * plate.normal;
}

void require_vacuum_side(const PlateLine& plate, const Vec2& x, const Vec2& y) {
  if (!(side(plate, x) > 0.0) || !(side(plate, y) > 0.0))
    throw domain_error("halfplane_gren: points must lie strictly on the vacuum side");
}

// Mixed-derivative diagonal of g0 when the separation is along e1:
//   M11(r) =  (mu/2pi) (mu K0(mu r) + K1(mu r)/r)
//   M22(r) = -(mu/2pi) K1(mu r)/r
void axis_mixed(double mu, double r, double& m11, double& m22) {
  const double z = mu * r;
  m22 = -mu * bessel_k1(z) / (two_pi * r);
  m11 = mu * mu * bessel_k0(z) / two_pi - m22;
}

}  // namespace

double halfplane_gren(SpectralParameter mu, const PlateLine& plate, const Vec2& x,
                      const Vec2& y) {
  require_vacuum_side(plate, x, y);
  return bessel_k0(mu.mu * (x - mirror(plate, y)).norm()) / two_pi;
}

KernelDerivs halfplane_gren_derivs(SpectralParameter mu, const PlateLine& plate,
                                   const Vec2& x, const Vec2& y) {
  require_vacuum_side(plate, x, y);
  const Vec2 ys = mirror(plate, y);
  const Mat2 refl = Mat2::Identity() - 2.0 * plate.normal * plate.normal.transpose();
  const KernelDerivs img = g0_derivs(mu, x, ys);  // derivatives in (x, y*)
  KernelDerivs out;
  out.value = -img.value;
  out.grad_x = -img.grad_x;
  out.grad_y = -refl.transpose() * img.grad_y;
  out.mixed = -img.mixed * refl;
  return out;
}

double parallel_plates_gren(const ImageSeriesSpec& spec, SpectralParameter mu,
                            const Vec2& x, const Vec2& y) {
  const double l = spec.gap;
  if (!(x.x() > 0.0 && x.x() < l && y.x() > 0.0 && y.x() < l))
    throw domain_error("parallel_plates_gren: points must lie strictly in the gap");
  double sum = 0.0;
  auto positive_image = [&](int n) {
    return g0(mu, x, Vec2(y.x() + 2.0 * n * l, y.y()));
  };
  auto negative_image = [&](int n) {
    return -g0(mu, x, Vec2(-y.x() + 2.0 * n * l, y.y()));
  };
  sum += negative_image(0);
  for (int n = 1; n <= spec.max_images; ++n) {
    const double shell = positive_image(n) + positive_image(-n) + negative_image(n) +
                         negative_image(-n);
    sum += shell;
    if (std::abs(shell) < spec.rel_tol * std::abs(sum) && n >= 2) return sum;
  }
  throw numerical_error("parallel_plates_gren: image series did not converge");
}

GreenCoincidence parallel_plates_coincidence(const ImageSeriesSpec& spec,
                                             SpectralParameter mu, const Vec2& x) {
  const double l = spec.gap;
  const double b = x.x();
  if (!(b > 0.0 && b < l))
    throw domain_error("parallel_plates_coincidence: point must lie strictly in the gap");

  GreenCoincidence out;
  double m11, m22;
  // n = 0 negative image at distance 2b.
  axis_mixed(mu.mu, 2.0 * b, m11, m22);
  out.value = bessel_k0(mu.mu * 2.0 * b) / two_pi;
  out.mixed(0, 0) = m11;
  out.mixed(1, 1) = -m22;

  for (int n = 1; n <= spec.max_images; ++n) {
    double shell_value = 0.0, shell_d11 = 0.0, shell_d22 = 0.0;
    // positive images at transverse distance 2 n l, both signs of n
    axis_mixed(mu.mu, 2.0 * n * l, m11, m22);
    shell_value += 2.0 * (-bessel_k0(mu.mu * 2.0 * n * l) / two_pi);
    shell_d11 += 2.0 * m11;
    shell_d22 += 2.0 * m22;
    // negative images at |2b - 2nl| and |2b + 2nl|
    for (const double r : {std::abs(2.0 * b - 2.0 * n * l), 2.0 * b + 2.0 * n * l}) {
      axis_mixed(mu.mu, r, m11, m22);
      shell_value += bessel_k0(mu.mu * r) / two_pi;
      shell_d11 += m11;
      shell_d22 -= m22;
    }
    out.value += shell_value;
    out.mixed(0, 0) += shell_d11;
    out.mixed(1, 1) += shell_d22;
    const double scale = std::abs(out.value) + std::abs(out.mixed(0, 0)) +
                         std::abs(out.mixed(1, 1));
    const double step = std::abs(shell_value) + std::abs(shell_d11) + std::abs(shell_d22);
    if (step < spec.rel_tol * scale && n >= 2) return out;
  }
  throw numerical_error("parallel_plates_coincidence: image series did not converge");
}

namespace {

class ImagePlatesEvaluator : public GreenEvaluator {
 public:
  ImagePlatesEvaluator(ImageSeriesSpec spec, SpectralParameter mu)
      : spec_(spec), mu_(mu) {}
  GreenCoincidence coincidence(const Vec2& x) const override {
    return parallel_plates_coincidence(spec_, mu_, x);
  }

 private:
  ImageSeriesSpec spec_;
  SpectralParameter mu_;
};

}  // namespace

std::unique_ptr<GreenEvaluator> ImagePlatesFamily::evaluator(SpectralParameter mu) const {
  return std::make_unique<ImagePlatesEvaluator>(spec_, mu);
}

double flat_plate_force(Dimensionality dim, double l, double mass) {
  if (!(l > 0.0)) throw domain_error("flat_plate_force: gap must be positive");
  if (mass != 0.0)
    throw domain_error("flat_plate_force: closed form available for m = 0 only");
  switch (dim) {
    case Dimensionality::two_d:
      return -zeta3 / (8.0 * M_PI * l * l * l);
    case Dimensionality::three_d:
      return -M_PI * M_PI / (480.0 * l * l * l * l);
  }
  throw domain_error("flat_plate_force: unknown dimensionality");
}

}  // namespace casbem
