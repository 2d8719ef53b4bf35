#include <logeuclid/surface.hpp>

#include <cmath>
#include <string>

namespace logeuclid {

SurfacePoint::SurfacePoint(double r, double phi) {
  if (!std::isfinite(r) || !std::isfinite(phi) || r < 0.0) {
    throw Error(ErrorCode::InvalidInput, "point needs finite r >= 0 and finite phi");
  }
  r_ = r;
  phi_ = r == 0.0 ? 0.0 : normalize_total_angle(phi);
}

bool approx_equal(const SurfacePoint& p, const SurfacePoint& q, double eps) {
  if (p.r() <= eps || q.r() <= eps) return p.r() <= eps && q.r() <= eps;
  return nearly_equal(p.r(), q.r(), eps) && angles_equal(p.phi(), q.phi(), eps);
}

SurfacePoint to_canonical(const ChartCoord& c) {
  if (c.is_apex()) return SurfacePoint::apex();
  if (c.sheet != 1 && c.sheet != 2) {
    throw Error(ErrorCode::InvalidInput, "sheet must be 1 or 2");
  }
  if (!(c.r > 0.0) || !(c.theta >= -kPi && c.theta <= kPi)) {
    throw Error(ErrorCode::InvalidInput, "chart coordinate needs r > 0 and theta in [-pi, pi]");
  }
  double phi = 0.0;
  if (c.sheet == 1) {
    phi = c.theta >= 0.0 ? c.theta : c.theta + kFourPi;
  } else {
    phi = c.theta + kTwoPi;
  }
  return {c.r, phi};
}

ChartCoord to_chart(const SurfacePoint& p) {
  if (p.is_apex()) {
    throw Error(ErrorCode::ApexHasNoChart, "the ramification point lies in no chart");
  }
  const double phi = p.phi();
  if (phi < kPi) return {1, phi, p.r()};
  if (phi < 3.0 * kPi) return {2, phi - kTwoPi, p.r()};
  return {1, phi - kFourPi, p.r()};
}

SurfacePoint from_cartesian(int sheet, double x, double y) {
  const double r = std::hypot(x, y);
  if (r == 0.0) return SurfacePoint::apex();
  return to_canonical({sheet, std::atan2(y, x), r});
}

AngularGap angular_gap(double phi1, double phi2) {
  const double ccw = wrap_positive(phi2 - phi1, kFourPi);
  // Taken from the ordered pair so swapping the arguments gives the same bits.
  const double span = std::max(phi1, phi2) - std::min(phi1, phi2);
  return {std::min(span, kFourPi - span), ccw};
}

double distance(const SurfacePoint& p, const SurfacePoint& q) {
  const double delta = angular_gap(p.phi(), q.phi()).delta_min;
  if (p.is_apex() || q.is_apex() || delta > kPi) return p.r() + q.r();
  // Chord law in the form (r_p - r_q)^2 + 4 r_p r_q sin^2(delta / 2), which
  // stays accurate for nearby points.
  const double dr = p.r() - q.r();
  const double s = std::sin(0.5 * delta);
  return std::sqrt(dr * dr + 4.0 * (p.r() * q.r()) * s * s);
}

bool Geodesic::is_radial() const {
  if (kind != GeodesicKind::Chord) return false;
  return from.is_apex() || to.is_apex() || angles_equal(from.phi(), to.phi());
}

Geodesic geodesic(const SurfacePoint& p, const SurfacePoint& q) {
  if (p == q) return {GeodesicKind::Degenerate, p, q, 0.0};
  const double length = distance(p, q);
  if (p.is_apex() || q.is_apex()) return {GeodesicKind::Chord, p, q, length};
  const double delta = angular_gap(p.phi(), q.phi()).delta_min;
  return {delta < kPi ? GeodesicKind::Chord : GeodesicKind::ApexPath, p, q, length};
}

DevelopedPair develop(const SurfacePoint& p, const SurfacePoint& q) {
  const double s = signed_gap(p.phi(), q.phi());
  return {p.r(), 0.0, q.r() * std::cos(s), q.r() * std::sin(s), s};
}

SurfacePoint geodesic_point_at(const Geodesic& g, double t) {
  const double slack = kEpsilon * std::max(1.0, g.length);
  if (!(t >= -slack && t <= g.length + slack)) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "t = " + std::to_string(t) + " outside [0, " + std::to_string(g.length) + "]");
  }
  t = std::clamp(t, 0.0, g.length);
  if (g.kind == GeodesicKind::Degenerate || t == 0.0) return g.from;
  if (t == g.length) return g.to;

  if (g.kind == GeodesicKind::ApexPath) {
    const double rp = g.from.r();
    if (t < rp) return {rp - t, g.from.phi()};
    if (t == rp) return SurfacePoint::apex();
    return {t - rp, g.to.phi()};
  }
  if (g.from.is_apex()) return {t, g.to.phi()};
  if (g.to.is_apex()) return {g.length - t, g.from.phi()};

  const DevelopedPair dev = develop(g.from, g.to);
  const double f = t / g.length;
  const double x = dev.px + f * (dev.qx - dev.px);
  const double y = dev.py + f * (dev.qy - dev.py);
  return {std::hypot(x, y), g.from.phi() + std::atan2(y, x)};
}

SurfacePoint transform_point(const SurfacePoint& p, double rotation, double scale) {
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidInput, "scale must be positive");
  if (p.is_apex()) return p;
  return {p.r() * scale, p.phi() + rotation};
}

}  // namespace logeuclid
