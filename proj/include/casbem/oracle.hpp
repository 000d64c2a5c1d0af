// Analytic and semi-analytic references: method-of-images Green
// functions for flat Dirichlet boundaries and closed-form flat-plate
// Casimir forces. Independent mathematics (mirror images) from the
// boundary-element path they validate; both sit on the same kernel.
#pragma once

#include "casbem/green.hpp"
#include "casbem/kernel.hpp"
#include "casbem/types.hpp"

namespace casbem {

// A flat plate as an infinite line: a point on it plus the unit normal
// of the vacuum side.
struct PlateLine {
  Vec2 point;
  Vec2 normal;
};

// G_ren for a single Dirichlet plate: +K0(mu |x - y*|)/(2 pi) with y*
// the mirror of y. Both x and y must lie strictly on the vacuum side.
double halfplane_gren(SpectralParameter mu, const PlateLine& plate, const Vec2& x,
                      const Vec2& y);

// Derivatives of the half-plane G_ren in (x, y); mixed(i,j) = dx_i dy_j.
KernelDerivs halfplane_gren_derivs(SpectralParameter mu, const PlateLine& plate,
                                   const Vec2& x, const Vec2& y);

// Alternating image series for two Dirichlet lines at x1 = 0 and x1 = l.
struct ImageSeriesSpec {
  double gap = 1.0;          // plate separation l
  double rel_tol = 1e-12;    // next-term / running-sum stop criterion
  int max_images = 200000;

  explicit ImageSeriesSpec(double l) : gap(l) {
    if (!(l > 0.0)) throw domain_error("ImageSeriesSpec: gap must be positive");
  }
};

// G_ren(mu, x, y) for the parallel-plate pair; x, y strictly inside.
double parallel_plates_gren(const ImageSeriesSpec& spec, SpectralParameter mu,
                            const Vec2& x, const Vec2& y);

// Coincidence data (value and mixed derivative matrix) at x.
GreenCoincidence parallel_plates_coincidence(const ImageSeriesSpec& spec,
                                             SpectralParameter mu, const Vec2& x);

// GreenFamily adapter so the stress/force pipeline can run on the image
// series with the boundary-element solver bypassed.
class ImagePlatesFamily : public GreenFamily {
 public:
  explicit ImagePlatesFamily(ImageSeriesSpec spec) : spec_(spec) {}
  std::unique_ptr<GreenEvaluator> evaluator(SpectralParameter mu) const override;

 private:
  ImageSeriesSpec spec_;
};

// Closed-form massless Dirichlet results for flat plates at distance l:
// 2D force per unit plate length, 3D force per unit plate area. Negative
// (attraction) under the upper-plate sign convention used throughout.
double flat_plate_force(Dimensionality dim, double l, double mass = 0.0);

}  // namespace casbem
