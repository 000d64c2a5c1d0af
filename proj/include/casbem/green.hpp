// Interface for renormalized Green functions at a fixed spectral
// parameter, as consumed by the stress integrals: the coincidence value
// G_ren(x, x) and the mixed derivative matrix
// D_ij = d/dx_i d/dy_j G_ren(x, y) |_{y = x}.
//
// Two families implement it: the boundary-element solver (bem.hpp) and
// the flat-plate image series (oracle.hpp). The stress and force layers
// only see this interface, so the spectral and line quadratures can be
// validated with the analytic family and reused bit-for-bit with the
// numerical one.
#pragma once

#include <memory>

#include "casbem/kernel.hpp"
#include "casbem/types.hpp"

namespace casbem {

struct GreenCoincidence {
  double value = 0.0;  // G_ren(x, x)
  Mat2 mixed = Mat2::Zero();
};

class GreenEvaluator {
 public:
  virtual ~GreenEvaluator() = default;
  virtual GreenCoincidence coincidence(const Vec2& x) const = 0;
};

class GreenFamily {
 public:
  virtual ~GreenFamily() = default;
  virtual std::unique_ptr<GreenEvaluator> evaluator(SpectralParameter mu) const = 0;
};

}  // namespace casbem
