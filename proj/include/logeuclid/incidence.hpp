#pragma once

// Lines of the log-euclidean plane and Hilbert's correspondence relation.
//
// A line is either a complete euclidean line that misses the apex (a chord
// line, spanning an open angular window of width pi), or a pair of closed
// rays from the apex whose minimal gap lies in [pi, 2pi] (an apex line).
// The line corresponding to two points is built from their geodesic; this
// relation is deliberately different from point-set membership.

#include <logeuclid/surface.hpp>

#include <vector>

namespace logeuclid {

enum class LineKind { Chord, Apex };

class Line {
 public:
  /// Euclidean line at distance d > 0 from the apex whose perpendicular foot
  /// has total angle psi. Points: (d / cos(phi - psi), phi), |phi - psi| < pi/2.
  static Line chord(double d, double psi);
  /// Two rays from the apex; the pair is unordered and stored sorted.
  /// Throws InvalidInput unless the minimal gap lies in [pi, 2pi].
  static Line apex(double phi_a, double phi_b);

  LineKind kind() const { return kind_; }
  bool is_chord() const { return kind_ == LineKind::Chord; }
  bool is_apex() const { return kind_ == LineKind::Apex; }

  double d() const { return a_; }
  double psi() const { return b_; }
  double phi_a() const { return a_; }
  double phi_b() const { return b_; }

 private:
  Line(LineKind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

  LineKind kind_;
  double a_;
  double b_;
};

/// Parameter equality within kEpsilon; apex pairs compare unordered.
bool approx_equal(const Line& l1, const Line& l2, double eps = kEpsilon);
inline bool operator==(const Line& l1, const Line& l2) { return approx_equal(l1, l2); }

enum class IntersectionKind { Empty, Point, SharedRay, Equal };

struct IntersectionResult {
  IntersectionKind kind = IntersectionKind::Empty;
  SurfacePoint point;    ///< Point
  double ray_phi = 0.0;  ///< SharedRay; the apex is part of the shared set
};

enum class Extension { Plus = 1, Minus = -1 };

inline double sign_of(Extension e) { return e == Extension::Plus ? 1.0 : -1.0; }

/// Far ray used whenever a line has to be continued straight through the
/// apex from a ray at `phi`: always the +pi side.
inline double opposite_ray(double phi) { return normalize_total_angle(phi + kPi); }

/// The line corresponding to two distinct points. Throws IdenticalPoints.
Line line_through(const SurfacePoint& a, const SurfacePoint& b);

/// Point-set membership (the apex belongs to every apex line).
bool on_line(const SurfacePoint& p, const Line& l, double eps = kEpsilon);

/// Hilbert's correspondence: l is the line built from a and b.
bool corresponds(const Line& l, const SurfacePoint& a, const SurfacePoint& b);

IntersectionResult line_intersection(const Line& l1, const Line& l2);

/// Line through a regular point with the given chart direction. A radial
/// direction yields the apex line continued on the side picked by `ext`.
/// Throws ApexOrigin when p is the apex.
Line line_through_point_direction(const SurfacePoint& p, double direction, Extension ext);

/// Common points of a non-degenerate geodesic and a line, ordered along the
/// geodesic. When a piece of the geodesic lies inside the line the two ends
/// of the overlap are returned.
std::vector<SurfacePoint> segment_intersect_line(const Geodesic& g, const Line& l);

Line transform_line(const Line& l, double rotation, double scale);

/// Point of the line at signed arc length t. Chord: t = 0 at the foot of the
/// perpendicular, positive towards larger phi. Apex: t = 0 at the apex,
/// positive along phi_a, negative along phi_b.
SurfacePoint point_on_line(const Line& l, double t);

}  // namespace logeuclid
