#pragma once

// Order, congruence and parallelism on the log-euclidean plane.
//
// Segments are measured by their geodesic length. Angles at a regular vertex
// are the euclidean chart angles; an angle at the apex between rays phi1 and
// phi2 measures half their minimal gap, which maps apertures (0, 2pi) onto
// (0, pi).

#include <logeuclid/incidence.hpp>

#include <array>
#include <optional>

namespace logeuclid {

enum class Side { Plus = 1, Minus = -1 };

/// Half-line from `origin`. At the apex, `direction` is the ray angle in
/// [0, 4pi). At a regular point it is the euclidean direction in the chart
/// containing the origin, in [0, 2pi) (both charts agree modulo 2pi). A ray
/// heading into the apex carries the total angle of the ray it continues on.
struct Ray {
  SurfacePoint origin;
  double direction = 0.0;
  std::optional<double> continuation;

  static Ray from_apex(double phi);
  /// Throws InvalidInput for a continuation less than pi away from the origin's ray.
  static Ray from_point(const SurfacePoint& origin, double direction,
                        std::optional<double> continuation = std::nullopt);

  bool heads_into_apex() const;
};

/// Ray from `origin` containing `through` (distinct). Rays into the apex
/// continue on `through`'s ray when the geodesic breaks there, else on the +pi side.
Ray ray_through(const SurfacePoint& origin, const SurfacePoint& through);

/// Chart direction heading into the apex with the continuation picked by `ext`.
Ray ray_into_apex(const SurfacePoint& origin, Extension ext);

struct Angle {
  SurfacePoint vertex;
  Ray side1;
  Ray side2;
};

/// True iff a, b, c are pairwise distinct and d(a,b) + d(b,c) = d(a,c).
bool between(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c);

/// Throws MissingExtensionChoice when the walk passes the apex on a ray
/// without a continuation, InvalidInput for non-positive length.
SurfacePoint lay_off_segment(const Ray& ray, double length);

/// Magnitude in (0, pi). Throws StraightOrNullAngle when the sides coincide
/// or form a line (regular: opposite; apex: gap pi or 2pi).
double angle_magnitude(const Angle& ang);

/// Same as angle_magnitude but returns the raw value in [0, pi] without
/// rejecting null or straight configurations.
double raw_angle_between(const Ray& r1, const Ray& r2);

/// Orientation of side2 relative to side1 (Plus = counter-clockwise).
Side angle_side(const Angle& ang);

/// Throws ResultWouldBeStraight when the apex image would be a line.
Ray lay_off_angle(const Ray& base, Side side, double magnitude);

bool congruent_segments(double len1, double len2);
bool congruent_angles(double m1, double m2);

/// Side i and angle i are opposite / at vertex i.
struct Triangle {
  std::array<SurfacePoint, 3> vertices;
  std::array<Geodesic, 3> sides;
  std::array<double, 3> angles;
};

/// Collinear in the correspondence sense: one line corresponds to every pair.
bool collinear(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c);

/// Throws DegenerateTriangle for repeated or collinear vertices. Angles are
/// reported in [0, pi]; a vertex whose two sides leave along the same ray
/// (both into the apex) has angle 0.
Triangle triangle_data(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c);

/// Smallest n with n * cd_len > ab_len.
long archimedes_steps(double ab_len, double cd_len);

/// Distinct lines without common points.
bool parallel(const Line& l1, const Line& l2);

}  // namespace logeuclid
