#include <logeuclid/congruence.hpp>

#include <cmath>

namespace logeuclid {

namespace {

double heading(const Ray& ray) { return wrap_half_turn(ray.direction - ray.origin.phi()); }

}  // namespace

Ray Ray::from_apex(double phi) {
  return {SurfacePoint::apex(), normalize_total_angle(phi), std::nullopt};
}

Ray Ray::from_point(const SurfacePoint& origin, double direction, std::optional<double> continuation) {
  if (origin.is_apex()) {
    throw Error(ErrorCode::ApexOrigin, "rays from the apex are built with Ray::from_apex");
  }
  Ray ray{origin, wrap_positive(direction, kTwoPi), std::nullopt};
  if (continuation) {
    if (!ray.heads_into_apex()) {
      throw Error(ErrorCode::InvalidInput, "only rays heading into the apex take a continuation");
    }
    if (circular_distance(origin.phi(), *continuation) < kPi - kEpsilon) {
      throw Error(ErrorCode::InvalidInput, "continuation ray must be at least pi away");
    }
    ray.continuation = normalize_total_angle(*continuation);
  }
  return ray;
}

bool Ray::heads_into_apex() const {
  return !origin.is_apex() && std::abs(heading(*this)) >= kPi - kEpsilon;
}

Ray ray_into_apex(const SurfacePoint& origin, Extension ext) {
  return Ray::from_point(origin, origin.phi() + kPi, origin.phi() + sign_of(ext) * kPi);
}

Ray ray_through(const SurfacePoint& origin, const SurfacePoint& through) {
  if (origin == through) throw Error(ErrorCode::IdenticalPoints, "ray needs two distinct points");
  if (origin.is_apex()) return Ray::from_apex(through.phi());
  if (through.is_apex()) return ray_into_apex(origin, Extension::Plus);

  const Geodesic g = geodesic(origin, through);
  if (g.kind == GeodesicKind::ApexPath) {
    return Ray::from_point(origin, origin.phi() + kPi, through.phi());
  }
  if (g.is_radial()) {
    if (through.r() > origin.r()) return Ray::from_point(origin, origin.phi());
    return ray_into_apex(origin, Extension::Plus);
  }
  const DevelopedPair dev = develop(origin, through);
  return Ray::from_point(origin, origin.phi() + std::atan2(dev.qy - dev.py, dev.qx - dev.px));
}

bool between(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c) {
  if (a == b || b == c || a == c) return false;
  return nearly_equal(distance(a, b) + distance(b, c), distance(a, c));
}

SurfacePoint lay_off_segment(const Ray& ray, double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw Error(ErrorCode::InvalidInput, "segment length must be positive");
  }
  const SurfacePoint& o = ray.origin;
  if (o.is_apex()) return {length, ray.direction};
  if (ray.heads_into_apex()) {
    if (nearly_equal(length, o.r())) return SurfacePoint::apex();
    if (length < o.r()) return {o.r() - length, o.phi()};
    if (!ray.continuation) {
      throw Error(ErrorCode::MissingExtensionChoice, "ray passes the apex without a continuation");
    }
    return {length - o.r(), *ray.continuation};
  }
  const double h = heading(ray);
  const double x = o.r() + length * std::cos(h);
  const double y = length * std::sin(h);
  return {std::hypot(x, y), o.phi() + std::atan2(y, x)};
}

double raw_angle_between(const Ray& r1, const Ray& r2) {
  if (r1.origin.is_apex()) return 0.5 * circular_distance(r1.direction, r2.direction);
  return std::abs(wrap_half_turn(r2.direction - r1.direction));
}

double angle_magnitude(const Angle& ang) {
  if (!(ang.side1.origin == ang.vertex) || !(ang.side2.origin == ang.vertex)) {
    throw Error(ErrorCode::InvalidInput, "angle sides must start at the vertex");
  }
  const double m = raw_angle_between(ang.side1, ang.side2);
  if (ang.vertex.is_apex()) {
    const double gap = 2.0 * m;
    if (gap <= kEpsilon || std::abs(gap - kPi) <= kEpsilon || std::abs(gap - kTwoPi) <= kEpsilon) {
      throw Error(ErrorCode::StraightOrNullAngle, "apex rays coincide or form a line");
    }
    return m;
  }
  if (m <= kEpsilon || m >= kPi - kEpsilon) {
    throw Error(ErrorCode::StraightOrNullAngle, "sides coincide or are opposite");
  }
  return m;
}

Side angle_side(const Angle& ang) {
  const double s = ang.vertex.is_apex() ? signed_gap(ang.side1.direction, ang.side2.direction)
                                        : wrap_half_turn(ang.side2.direction - ang.side1.direction);
  return s > 0.0 ? Side::Plus : Side::Minus;
}

Ray lay_off_angle(const Ray& base, Side side, double magnitude) {
  if (!(magnitude > 0.0 && magnitude < kPi)) {
    throw Error(ErrorCode::InvalidInput, "angle magnitude must lie in (0, pi)");
  }
  const double sign = side == Side::Plus ? 1.0 : -1.0;
  if (base.origin.is_apex()) {
    if (std::abs(2.0 * magnitude - kPi) <= kEpsilon) {
      throw Error(ErrorCode::ResultWouldBeStraight, "an apex aperture of pi is a line");
    }
    return Ray::from_apex(base.direction + sign * 2.0 * magnitude);
  }
  const Ray probe{base.origin, wrap_positive(base.direction + sign * magnitude, kTwoPi), std::nullopt};
  if (probe.heads_into_apex()) return ray_into_apex(base.origin, Extension::Plus);
  return probe;
}

bool congruent_segments(double len1, double len2) { return nearly_equal(len1, len2); }
bool congruent_angles(double m1, double m2) { return nearly_equal(m1, m2); }

bool collinear(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c) {
  if (a == b || b == c || a == c) return true;
  const Line ab = line_through(a, b);
  return corresponds(ab, a, c) && corresponds(ab, b, c);
}

Triangle triangle_data(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c) {
  if (a == b || b == c || a == c) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle vertices must be distinct");
  }
  if (collinear(a, b, c)) throw Error(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
  Triangle t{{a, b, c}, {geodesic(b, c), geodesic(c, a), geodesic(a, b)}, {}};
  for (int i = 0; i < 3; ++i) {
    const SurfacePoint& v = t.vertices[i];
    t.angles[i] = raw_angle_between(ray_through(v, t.vertices[(i + 1) % 3]),
                                    ray_through(v, t.vertices[(i + 2) % 3]));
  }
  return t;
}

long archimedes_steps(double ab_len, double cd_len) {
  if (!(ab_len > 0.0) || !(cd_len > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "segment lengths must be positive");
  }
  long n = static_cast<long>(std::floor(ab_len / cd_len)) + 1;
  while (n > 1 && static_cast<double>(n - 1) * cd_len > ab_len) --n;
  while (static_cast<double>(n) * cd_len <= ab_len) ++n;
  return n;
}

bool parallel(const Line& l1, const Line& l2) {
  return !approx_equal(l1, l2) && line_intersection(l1, l2).kind == IntersectionKind::Empty;
}

}  // namespace logeuclid
