// Rack-gear plate profiles, two-plate scenes and boundary meshes.
//
// Coordinates: x is the transverse (gap) direction, y the lateral
// (periodic) direction. Points are (x, y).
//
// One period of the lower plate consists of four straight edges: the
// tooth face of length u tilted by theta from the lateral axis, a
// descending flank, the valley edge of length v tilted by the same
// theta (parallel to the face), and an ascending flank. The flanks
// share the lateral run (a - (u+v) cos theta) / 2. The face midpoint
// sits at transverse level 0, the valley midpoint at -H. The upper
// plate is the point reflection of the lower one about the gap
// midpoint and is shifted laterally by s.
#pragma once

#include <vector>

#include "casbem/types.hpp"

namespace casbem {

enum class TiltRule {
  sine_ratio,  // sin(theta) = (u - v) / u; theta = 0 when u = v
  flat,        // theta = 0 regardless of v
};

struct RackGeometry {
  double a = 2.0;    // profile period
  double u = 0.5;    // face edge length
  double v = 0.5;    // valley edge length
  double s = 0.0;    // lateral shift of the upper plate
  double l = 1.0;    // gap width between facing u-edges
  double H = 0.5;    // tooth height (face-to-valley transverse drop)
  TiltRule tilt_rule = TiltRule::sine_ratio;

  // Throws domain_error if the parameter invariants fail.
  void validate() const;

  // Tilt angle of the face and valley edges.
  double tilt_angle() const;

  // Shift reduced to [0, a).
  double canonical_shift() const;
};

// One period of a piecewise-linear surface curve. The last vertex
// minus the first equals (0, period) exactly.
struct Profile {
  std::vector<Vec2> vertices;
  double period = 0.0;

  double arc_length() const;
  double shortest_edge() const;
  // Throws domain_error on: repeated vertices, broken periodic
  // closure, or a self-intersecting polyline (checked against the
  // neighbouring period as well).
  void validate() const;
};

Profile build_rack_profile(const RackGeometry& geom);

// Two positioned plates, truncated to a finite odd number of periods.
struct Scene {
  RackGeometry geom;              // with s canonically reduced
  int periods_realized = 0;
  std::vector<Vec2> lower;        // realized polyline, ascending y
  std::vector<Vec2> upper;        // realized polyline, ascending y
  double strip_lo = 0.0;          // transverse band guaranteed inside the
  double strip_hi = 0.0;          //   vacuum gap for every y
  double min_separation = 0.0;    // minimum plate-to-plate distance

  // y-window of the central period of the lower plate.
  double center_period_start() const { return 0.0; }
};

Scene assemble_scene(const RackGeometry& geom, int periods_realized);

struct Element {
  Vec2 a, b;       // endpoints
  Vec2 mid;        // collocation node
  Vec2 tangent;    // unit, a -> b
  Vec2 normal;     // unit, into the vacuum gap
  double len = 0.0;
  double arc_mid = 0.0;  // arc-length position of mid along its curve
  int plate = 0;         // 0 lower, 1 upper
  int edge_id = -1;      // straight edge of origin
  int prev = -1;         // neighbour along the same curve, -1 at ends
  int next = -1;
};

struct BoundaryMesh {
  std::vector<Element> elements;
  double target_size = 0.0;

  double total_arc_length() const;
  // Distance from a point to the nearest element segment.
  double distance_to(const Vec2& p) const;
  // True if element i and both its neighbours lie on one straight
  // stretch of the curve, so the neighbour interpolation stencil may
  // cross the shared vertices.
  bool stencil_eligible(int i) const;
};

BoundaryMesh mesh_scene(const Scene& scene, double target_element_size);

// Split every element into `factor` equal pieces. Pure refinement:
// the geometry (vertex set, corners, total arc length) is unchanged.
BoundaryMesh refine(const BoundaryMesh& mesh, int factor);

// Segment utilities shared by the scene assembly and the meshing.
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);
double segment_segment_distance(const Vec2& a1, const Vec2& b1, const Vec2& a2,
                                const Vec2& b2);
bool segments_intersect(const Vec2& a1, const Vec2& b1, const Vec2& a2, const Vec2& b2);
double polyline_min_distance(const std::vector<Vec2>& p, const std::vector<Vec2>& q);

}  // namespace casbem
