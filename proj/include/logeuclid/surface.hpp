#pragma once

// The log-euclidean plane: two slit copies of the punctured plane glued
// crosswise along the negative real axis, completed by the ramification
// point. As a metric space it is the flat cone of total angle 4pi, and all
// computation happens in the cone coordinates (r, phi) with phi in [0, 4pi).

#include <logeuclid/angles.hpp>
#include <logeuclid/error.hpp>

namespace logeuclid {

/// A point of the surface. The ramification point ("apex") is r = 0 and is
/// always stored with phi = 0.
class SurfacePoint {
 public:
  SurfacePoint() = default;
  /// Throws InvalidInput for negative or non-finite radius.
  SurfacePoint(double r, double phi);

  static SurfacePoint apex() { return {}; }

  double r() const { return r_; }
  double phi() const { return phi_; }
  bool is_apex() const { return r_ == 0.0; }

 private:
  double r_ = 0.0;
  double phi_ = 0.0;
};

/// Tolerance equality: radii within kEpsilon (relative) and angles within
/// kEpsilon on the 4pi circle. A point with r <= kEpsilon equals the apex.
bool approx_equal(const SurfacePoint& p, const SurfacePoint& q, double eps = kEpsilon);
inline bool operator==(const SurfacePoint& p, const SurfacePoint& q) { return approx_equal(p, q); }

/// Position in one of the two euclidean charts. Sheet 1 holds phi in
/// [0, pi] u (3pi, 4pi), sheet 2 holds phi in [pi, 3pi]. On input theta may be
/// anywhere in [-pi, pi]; the slit rays have two chart representations.
struct ChartCoord {
  int sheet = 1;
  double theta = 0.0;
  double r = 0.0;  ///< 0 denotes the apex, which lies in no chart

  bool is_apex() const { return r == 0.0; }
};

SurfacePoint to_canonical(const ChartCoord& c);
/// Emits theta in [-pi, pi): phi = pi maps to (2, -pi) and phi = 3pi to (1, -pi).
ChartCoord to_chart(const SurfacePoint& p);
/// Chart point given by cartesian coordinates; (0, 0) is the apex.
SurfacePoint from_cartesian(int sheet, double x, double y);

struct AngularGap {
  double delta_min;  ///< [0, 2pi]
  double delta_ccw;  ///< [0, 4pi)
};

AngularGap angular_gap(double phi1, double phi2);

/// Length of the shortest path: the chord law while the angular gap is at
/// most pi, otherwise the path through the apex.
double distance(const SurfacePoint& p, const SurfacePoint& q);

enum class GeodesicKind { Chord, ApexPath, Degenerate };

/// The unique shortest path between two points: a straight segment inside
/// a sector of aperture below pi, or two radial segments broken at the apex.
struct Geodesic {
  GeodesicKind kind = GeodesicKind::Degenerate;
  SurfacePoint from;
  SurfacePoint to;
  double length = 0.0;

  bool is_radial() const;
};

Geodesic geodesic(const SurfacePoint& p, const SurfacePoint& q);

/// Point at arc length t from g.from. Throws ParameterOutOfRange outside
/// [0, g.length] (a relative slack of kEpsilon is clamped).
SurfacePoint geodesic_point_at(const Geodesic& g, double t);

/// Similarity of the surface: rotation by any angle (2pi swaps the sheets)
/// followed by scaling about the apex.
SurfacePoint transform_point(const SurfacePoint& p, double rotation, double scale);

/// Straight-segment view in a developed plane: `p` sits at (r_p, 0) and `q` at
/// r_q * (cos s, sin s) with s the signed gap from phi_p to phi_q.
struct DevelopedPair {
  double px, py;
  double qx, qy;
  double gap;  ///< s
};

DevelopedPair develop(const SurfacePoint& p, const SurfacePoint& q);

}  // namespace logeuclid
