#include "casbem/bessel.hpp"

#include <cmath>
#include <limits>

#include "casbem/types.hpp"

namespace casbem {
namespace {

// Horner evaluation, coefficients in ascending order.
template <int N>
double poly(const double (&c)[N], double x) {
  double r = c[N - 1];
  for (int i = N - 2; i >= 0; --i) r = r * x + c[i];
  return r;
}

// --- K0 -------------------------------------------------------------
// Small-x branch: K0(x) = R(x^2/4)*(x^2/4) + 1 multiplying -log(x), plus
// an even polynomial correction. Large-x branch: rational in 1/x times
// exp(-x)/sqrt(x). Coefficients from the Russon--Blair minimax family as
// refined for double precision.

constexpr double k0_small_y = 1.137250900268554688;
constexpr double k0_small_p[] = {
    -1.372509002685546267e-01, 2.574916117833312855e-01,
    1.395474602146869316e-02,  5.445476986653926759e-04,
    7.125159422136622118e-06};
constexpr double k0_small_q[] = {
    1.000000000000000000e+00, -5.458333438017788530e-02,
    1.291052816975251298e-03, -1.367653946978586591e-05};
constexpr double k0_small_p2[] = {
    1.159315156584124484e-01, 2.789828789146031732e-01,
    2.524892993216121934e-02, 8.460350907213637784e-04,
    1.491471924309617534e-05, 1.627106892422088488e-07,
    1.208266102392756055e-09, 6.611686391749704310e-12};
constexpr double k0_large_p[] = {
    2.533141373155002416e-01,  3.628342133984595192e+00,
    1.868441889406606057e+01,  4.306243981063412784e+01,
    4.424116209627428189e+01,  1.562095339356220468e+01,
    -1.810138978229410898e+00, -1.414237994269995877e+00,
    -9.369168119754924625e-02};
constexpr double k0_large_q[] = {
    1.000000000000000000e+00, 1.494194694879908328e+01,
    8.265296455388554217e+01, 2.162779506621866970e+02,
    2.845145155184222157e+02, 1.851714491916334995e+02,
    5.486540717439723515e+01, 6.118075837628957015e+00,
    1.586261269326235053e-01};

// exp(x)*K0(x) for x > 1.
double k0e_large(double x) {
  const double t = 1.0 / x;
  return (poly(k0_large_p, t) / poly(k0_large_q, t) + 1.0) / std::sqrt(x);
}

double k0_small(double x) {
  const double a = x * x / 4.0;
  const double g = (poly(k0_small_p, a) / poly(k0_small_q, a) + k0_small_y) * a + 1.0;
  return poly(k0_small_p2, x * x) - std::log(x) * g;
}

// --- K1 -------------------------------------------------------------

constexpr double k1_small_y = 8.69547128677368164e-02;
constexpr double k1_small_p[] = {
    -3.62137953440350228e-03, 7.11842087490330300e-03,
    1.00302560256614306e-05,  1.77231085381040811e-06};
constexpr double k1_small_q[] = {
    1.00000000000000000e+00,  -4.80414794429043831e-02,
    9.85972641934416525e-04,  -8.91196859397070326e-06};
constexpr double k1_small_p2[] = {
    -3.07965757829206184e-01, -7.80929703673074907e-02,
    -2.70619343754051620e-03, -2.49549522229072008e-05};
constexpr double k1_small_q2[] = {
    1.00000000000000000e+00,  -2.36316836412163098e-02,
    2.64524577525962719e-04,  -1.49749618004162787e-06};
constexpr double k1_large_y = 1.45034217834472656;
constexpr double k1_large_p[] = {
    -1.97028041029226295e-01, -2.32408961548087617e+00,
    -7.98269784507699938e+00, -2.39968410774221632e+00,
    3.28314043780858713e+01,  5.67713761158496058e+01,
    3.30907788466509823e+01,  6.62582288933739787e+00,
    3.08851840645286691e-01};
constexpr double k1_large_q[] = {
    1.00000000000000000e+00, 1.41811409298826118e+01,
    7.35979466317556420e+01, 1.77821793937080859e+02,
    2.11014501598705982e+02, 1.19425262951064454e+02,
    2.88448064302447607e+01, 2.27912927104139732e+00,
    2.50358186953478678e-02};

double k1e_large(double x) {
  const double t = 1.0 / x;
  return (poly(k1_large_p, t) / poly(k1_large_q, t) + k1_large_y) / std::sqrt(x);
}

double k1_small(double x) {
  const double a = x * x / 4.0;
  const double g =
      ((poly(k1_small_p, a) / poly(k1_small_q, a) + k1_small_y) * a * a + a / 2.0 + 1.0) *
      x / 2.0;
  return poly(k1_small_p2, x * x) / poly(k1_small_q2, x * x) * x + 1.0 / x +
         std::log(x) * g;
}

void require_positive(double x) {
  if (!(x > 0.0)) throw domain_error("bessel_k: argument must be positive");
}

// exp underflows around 745; K_n also carries 1/sqrt(x).
constexpr double exp_underflow = 740.0;

}  // namespace

double bessel_k0(double x) {
  require_positive(x);
  if (x <= 1.0) return k0_small(x);
  if (x > exp_underflow) return 0.0;
  return std::exp(-x) * k0e_large(x);
}

double bessel_k1(double x) {
  require_positive(x);
  if (x <= 1.0) return k1_small(x);
  if (x > exp_underflow) return 0.0;
  return std::exp(-x) * k1e_large(x);
}

double bessel_k2(double x) {
  require_positive(x);
  return bessel_k0(x) + 2.0 * bessel_k1(x) / x;
}

double bessel_k(int order, double x) {
  switch (order) {
    case 0: return bessel_k0(x);
    case 1: return bessel_k1(x);
    case 2: return bessel_k2(x);
    default: throw domain_error("bessel_k: order must be 0, 1 or 2");
  }
}

double bessel_k0_scaled(double x) {
  require_positive(x);
  if (x <= 1.0) return std::exp(x) * k0_small(x);
  return k0e_large(x);
}

double bessel_k1_scaled(double x) {
  require_positive(x);
  if (x <= 1.0) return std::exp(x) * k1_small(x);
  return k1e_large(x);
}

}  // namespace casbem
