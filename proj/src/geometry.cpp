#include "casbem/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace casbem {
namespace {

constexpr double tiny = 1e-12;

std::string bad(const std::string& what) { return "geometry: " + what; }

}  // namespace

void RackGeometry::validate() const {
  if (!(a > 0.0)) throw domain_error(bad("period a must be positive"));
  if (!(u > 0.0)) throw domain_error(bad("face length u must be positive"));
  if (!(v > 0.0)) throw domain_error(bad("valley length v must be positive"));
  if (!(l > 0.0)) throw domain_error(bad("gap width l must be positive"));
  if (!(H >= 0.0)) throw domain_error(bad("tooth height H must be >= 0"));
  if (u + v >= a) throw domain_error(bad("u + v must be smaller than the period a"));
  if (tilt_rule == TiltRule::sine_ratio && std::abs(u - v) >= u)
    throw domain_error(bad("sine_ratio tilt rule needs |u - v| < u"));
}

double RackGeometry::tilt_angle() const {
  switch (tilt_rule) {
    case TiltRule::sine_ratio: return std::asin((u - v) / u);
    case TiltRule::flat: return 0.0;
  }
  throw domain_error(bad("unknown tilt rule"));
}

double RackGeometry::canonical_shift() const {
  double r = std::fmod(s, a);
  if (r < 0.0) r += a;
  return r;
}

double Profile::arc_length() const {
  double sum = 0.0;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    sum += (vertices[i + 1] - vertices[i]).norm();
  return sum;
}

double Profile::shortest_edge() const {
  double m = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    m = std::min(m, (vertices[i + 1] - vertices[i]).norm());
  return m;
}

void Profile::validate() const {
  if (vertices.size() < 2) throw domain_error(bad("profile needs at least one edge"));
  if (!(period > 0.0)) throw domain_error(bad("profile period must be positive"));
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    if ((vertices[i + 1] - vertices[i]).norm() < tiny)
      throw domain_error(bad("repeated consecutive profile vertices"));
  const Vec2 closure = vertices.back() - vertices.front();
  if (std::abs(closure.x()) > tiny || std::abs(closure.y() - period) > tiny)
    throw domain_error(bad("profile does not close periodically"));
  // Simplicity within the period and against the next-period replica.
  const size_t n = vertices.size() - 1;
  auto edge = [&](size_t i, int shift) {
    return std::pair<Vec2, Vec2>(vertices[i] + Vec2(0.0, shift * period),
                                 vertices[i + 1] + Vec2(0.0, shift * period));
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i + 1) continue;  // adjacent, shares a vertex
      auto [a1, b1] = edge(i, 0);
      auto [a2, b2] = edge(j, 0);
      if (segments_intersect(a1, b1, a2, b2))
        throw domain_error(bad("profile self-intersects"));
    }
    for (size_t j = 0; j < n; ++j) {
      if (i == n - 1 && j == 0) continue;  // consecutive across the seam
      if (i == 0 && j == n - 1) continue;
      auto [a1, b1] = edge(i, 0);
      auto [a2, b2] = edge(j, 1);
      if (segments_intersect(a1, b1, a2, b2))
        throw domain_error(bad("profile self-intersects across periods"));
    }
  }
}

Profile build_rack_profile(const RackGeometry& geom) {
  geom.validate();
  const double th = geom.tilt_angle();
  const double st = std::sin(th), ct = std::cos(th);
  const double flank_run = 0.5 * (geom.a - (geom.u + geom.v) * ct);
  if (flank_run <= tiny)
    throw domain_error(bad("edges do not fit in one period: flank run <= 0"));

  Profile p;
  p.period = geom.a;
  const double hu = 0.5 * geom.u, hv = 0.5 * geom.v;
  p.vertices = {
      Vec2(-hu * st, 0.0),                                          // face start
      Vec2(hu * st, geom.u * ct),                                   // face end
      Vec2(-geom.H - hv * st, geom.u * ct + flank_run),             // valley start
      Vec2(-geom.H + hv * st, geom.u * ct + flank_run + geom.v * ct),  // valley end
      Vec2(-hu * st, geom.a),                                       // next face start
  };
  p.validate();
  return p;
}

namespace {

// Realize `periods` copies of a one-period profile, ascending y,
// centered on the k = 0 period.
std::vector<Vec2> realize(const Profile& p, int periods) {
  const int half = (periods - 1) / 2;
  std::vector<Vec2> out;
  out.reserve(static_cast<size_t>(periods) * (p.vertices.size() - 1) + 1);
  for (int k = -half; k <= half; ++k) {
    const Vec2 shift(0.0, k * p.period);
    const size_t begin = (k == -half) ? 0 : 1;  // skip the shared seam vertex
    for (size_t i = begin; i < p.vertices.size(); ++i)
      out.push_back(p.vertices[i] + shift);
  }
  return out;
}

}  // namespace

Scene assemble_scene(const RackGeometry& geom, int periods_realized) {
  geom.validate();
  if (periods_realized < 3 || periods_realized % 2 == 0)
    throw domain_error(bad("periods_realized must be odd and >= 3"));

  RackGeometry g = geom;
  g.s = geom.canonical_shift();

  const Profile lower = build_rack_profile(g);
  const double th = g.tilt_angle();
  const double st = std::sin(th), ct = std::cos(th);

  // Reflection center: half the gap width along the face normal from
  // the face midpoint, so the facing u-edges sit at perpendicular
  // distance l when the shift vanishes.
  const Vec2 face_mid(0.0, 0.5 * g.u * ct);
  const Vec2 face_normal(ct, -st);
  const Vec2 center = face_mid + 0.5 * g.l * face_normal;

  // Point-reflect one period, shift by s, reverse to ascending y.
  Profile upper;
  upper.period = g.a;
  for (auto it = lower.vertices.rbegin(); it != lower.vertices.rend(); ++it)
    upper.vertices.push_back(2.0 * center - *it + Vec2(0.0, g.s));
  // Re-anchor the first vertex into [0, a) for a canonical realization.
  const double y0 = upper.vertices.front().y();
  const double rebase = -std::floor(y0 / g.a) * g.a;
  for (Vec2& q : upper.vertices) q.y() += rebase;
  upper.validate();

  Scene scene;
  scene.geom = g;
  scene.periods_realized = periods_realized;
  scene.lower = realize(lower, periods_realized);
  scene.upper = realize(upper, periods_realized);

  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const Vec2& q : scene.lower) lo = std::max(lo, q.x());
  for (const Vec2& q : scene.upper) hi = std::min(hi, q.x());
  scene.strip_lo = lo;
  scene.strip_hi = hi;

  scene.min_separation = polyline_min_distance(scene.lower, scene.upper);
  if (!(scene.min_separation > 0.0) || !(hi > lo)) {
    std::ostringstream msg;
    msg << "plates intersect or touch at shift s = " << g.s;
    throw domain_error(bad(msg.str()));
  }
  return scene;
}

double BoundaryMesh::total_arc_length() const {
  double sum = 0.0;
  for (const Element& e : elements) sum += e.len;
  return sum;
}

double BoundaryMesh::distance_to(const Vec2& p) const {
  double d = std::numeric_limits<double>::infinity();
  for (const Element& e : elements)
    d = std::min(d, point_segment_distance(p, e.a, e.b));
  return d;
}

bool BoundaryMesh::stencil_eligible(int i) const {
  const Element& e = elements[i];
  if (e.prev < 0 || e.next < 0) return false;
  const Element& p = elements[e.prev];
  const Element& n = elements[e.next];
  // cross(t1, t2) ~ turn angle; collinear stretches qualify even when
  // the edge ids differ (e.g. the flat-plate profile).
  auto straight = [&](const Element& x, const Element& y) {
    return std::abs(x.tangent.x() * y.tangent.y() - x.tangent.y() * y.tangent.x()) < 1e-9 &&
           x.tangent.dot(y.tangent) > 0.0;
  };
  return straight(p, e) && straight(e, n);
}

namespace {

void mesh_polyline(const std::vector<Vec2>& poly, int plate, double target,
                   int& edge_counter, std::vector<Element>& out) {
  const int first = static_cast<int>(out.size());
  double arc = 0.0;
  for (size_t i = 0; i + 1 < poly.size(); ++i) {
    const Vec2 A = poly[i], B = poly[i + 1];
    const double len = (B - A).norm();
    const int n = std::max(1, static_cast<int>(std::ceil(len / target - 1e-12)));
    const Vec2 t = (B - A) / len;
    const Vec2 nrm = (plate == 0) ? Vec2(t.y(), -t.x()) : Vec2(-t.y(), t.x());
    for (int k = 0; k < n; ++k) {
      Element e;
      e.a = A + (static_cast<double>(k) / n) * (B - A);
      e.b = A + (static_cast<double>(k + 1) / n) * (B - A);
      e.mid = 0.5 * (e.a + e.b);
      e.len = len / n;
      e.tangent = t;
      e.normal = nrm;
      e.plate = plate;
      e.edge_id = edge_counter;
      e.arc_mid = arc + (k + 0.5) * (len / n);
      out.push_back(e);
    }
    arc += len;
    ++edge_counter;
  }
  const int last = static_cast<int>(out.size()) - 1;
  for (int i = first; i <= last; ++i) {
    out[i].prev = (i > first) ? i - 1 : -1;
    out[i].next = (i < last) ? i + 1 : -1;
  }
}

}  // namespace

BoundaryMesh mesh_scene(const Scene& scene, double target_element_size) {
  if (!(target_element_size > 0.0))
    throw domain_error(bad("target element size must be positive"));
  auto shortest = [](const std::vector<Vec2>& poly) {
    double m = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < poly.size(); ++i)
      m = std::min(m, (poly[i + 1] - poly[i]).norm());
    return m;
  };
  const double shortest_edge = std::min(shortest(scene.lower), shortest(scene.upper));
  if (target_element_size >= shortest_edge)
    throw domain_error(bad("target element size must be smaller than the shortest edge"));

  BoundaryMesh mesh;
  mesh.target_size = target_element_size;
  int edge_counter = 0;
  mesh_polyline(scene.lower, 0, target_element_size, edge_counter, mesh.elements);
  mesh_polyline(scene.upper, 1, target_element_size, edge_counter, mesh.elements);
  return mesh;
}

BoundaryMesh refine(const BoundaryMesh& mesh, int factor) {
  if (factor < 2) throw domain_error(bad("refinement factor must be >= 2"));
  BoundaryMesh out;
  out.target_size = mesh.target_size / factor;
  out.elements.reserve(mesh.elements.size() * factor);

  for (size_t i = 0; i < mesh.elements.size(); ++i) {
    const Element& e = mesh.elements[i];
    const bool curve_start = (e.prev < 0);
    const int base = static_cast<int>(out.elements.size());
    for (int k = 0; k < factor; ++k) {
      Element s = e;
      s.a = e.a + (static_cast<double>(k) / factor) * (e.b - e.a);
      s.b = e.a + (static_cast<double>(k + 1) / factor) * (e.b - e.a);
      s.mid = 0.5 * (s.a + s.b);
      s.len = e.len / factor;
      s.arc_mid = e.arc_mid - 0.5 * e.len + (k + 0.5) * s.len;
      s.prev = (k == 0) ? (curve_start ? -1 : base - 1) : base + k - 1;
      s.next = base + k + 1;  // fixed below at curve ends
      out.elements.push_back(s);
    }
    if (e.next < 0) out.elements.back().next = -1;
  }
  return out;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 < tiny * tiny) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

bool segments_intersect(const Vec2& a1, const Vec2& b1, const Vec2& a2, const Vec2& b2) {
  auto cross = [](const Vec2& u, const Vec2& w) { return u.x() * w.y() - u.y() * w.x(); };
  const Vec2 d1 = b1 - a1, d2 = b2 - a2;
  const double denom = cross(d1, d2);
  const Vec2 r = a2 - a1;
  if (std::abs(denom) < tiny) {
    // parallel: overlap iff collinear and parameter ranges touch
    if (std::abs(cross(r, d1)) > tiny) return false;
    const double l1 = d1.squaredNorm();
    double t0 = r.dot(d1) / l1;
    double t1 = (a2 + d2 - a1).dot(d1) / l1;
    if (t0 > t1) std::swap(t0, t1);
    return t1 > tiny && t0 < 1.0 - tiny;
  }
  const double t = cross(r, d2) / denom;
  const double s = cross(r, d1) / denom;
  return t > tiny && t < 1.0 - tiny && s > tiny && s < 1.0 - tiny;
}

double segment_segment_distance(const Vec2& a1, const Vec2& b1, const Vec2& a2,
                                const Vec2& b2) {
  if (segments_intersect(a1, b1, a2, b2)) return 0.0;
  return std::min(
      std::min(point_segment_distance(a1, a2, b2), point_segment_distance(b1, a2, b2)),
      std::min(point_segment_distance(a2, a1, b1), point_segment_distance(b2, a1, b1)));
}

double polyline_min_distance(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < p.size(); ++i)
    for (size_t j = 0; j + 1 < q.size(); ++j)
      d = std::min(d, segment_segment_distance(p[i], p[i + 1], q[j], q[j + 1]));
  return d;
}

}  // namespace casbem
