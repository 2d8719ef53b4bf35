#include <logeuclid/incidence.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

namespace logeuclid {

namespace {

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

// A sub-interval of a geodesic, in arc length, together with its end points.
struct Hit {
  double t0, t1;
  SurfacePoint p0, p1;
};

Hit point_hit(double t, const SurfacePoint& p) { return {t, t, p, p}; }

// One straight piece of a geodesic (at most one end is the apex).
struct Piece {
  SurfacePoint p0, p1;
  double offset;  // arc length of p0 along the whole geodesic
  double length;
};

bool in_unit_range(double tau, double tol) { return tau >= -tol && tau <= 1.0 + tol; }

void intersect_radial(const Piece& piece, const Line& l, std::vector<Hit>& hits) {
  const double phi = piece.p0.is_apex() ? piece.p1.phi() : piece.p0.phi();
  const double r0 = piece.p0.r();
  const double r1 = piece.p1.r();
  const double tol = kEpsilon;
  if (l.is_apex()) {
    if (angles_equal(phi, l.phi_a()) || angles_equal(phi, l.phi_b())) {
      hits.push_back({piece.offset, piece.offset + piece.length, piece.p0, piece.p1});
    } else if (piece.p0.is_apex()) {
      hits.push_back(point_hit(piece.offset, piece.p0));
    } else if (piece.p1.is_apex()) {
      hits.push_back(point_hit(piece.offset + piece.length, piece.p1));
    }
    return;
  }
  const double u = signed_gap(l.psi(), phi);
  if (std::abs(u) >= 0.5 * kPi) return;
  const double rho = l.d() / std::cos(u);
  const double tau = (rho - r0) / (r1 - r0);
  if (!in_unit_range(tau, tol)) return;
  const double t = piece.offset + std::clamp(tau, 0.0, 1.0) * piece.length;
  hits.push_back(point_hit(t, SurfacePoint(rho, phi)));
}

void intersect_slanted(const Piece& piece, const Line& l, std::vector<Hit>& hits) {
  const DevelopedPair dev = develop(piece.p0, piece.p1);
  const double ex = dev.qx - dev.px;
  const double ey = dev.qy - dev.py;
  const double base = piece.p0.phi();
  const double tol = kEpsilon;

  auto emit = [&](double tau, double alpha_hint, bool use_hint) {
    tau = std::clamp(tau, 0.0, 1.0);
    const double x = dev.px + tau * ex;
    const double y = dev.py + tau * ey;
    const double alpha = use_hint ? alpha_hint : std::atan2(y, x);
    hits.push_back(point_hit(piece.offset + tau * piece.length,
                             SurfacePoint(std::hypot(x, y), base + alpha)));
  };

  if (l.is_chord()) {
    const double u = signed_gap(base, l.psi());
    const double nx = std::cos(u);
    const double ny = std::sin(u);
    const double denom = nx * ex + ny * ey;
    const double num = l.d() - nx * dev.px;
    if (std::abs(denom) <= 1e-14 * piece.length) {
      if (on_line(piece.p0, l) && on_line(piece.p1, l)) {
        hits.push_back({piece.offset, piece.offset + piece.length, piece.p0, piece.p1});
      }
      return;
    }
    const double tau = num / denom;
    if (!in_unit_range(tau, tol)) return;
    const double tc = std::clamp(tau, 0.0, 1.0);
    const double alpha = std::atan2(dev.py + tc * ey, dev.px + tc * ex);
    // The developed equation also describes the copy of the line one sheet
    // away; only hits inside the line's own angular window count.
    if (std::abs(alpha - u) >= 0.5 * kPi) return;
    emit(tau, alpha, true);
    return;
  }

  const double lo = std::min(0.0, dev.gap);
  const double hi = std::max(0.0, dev.gap);
  for (const double ray : {l.phi_a(), l.phi_b()}) {
    const double w = signed_gap(base, ray);
    if (w < lo - tol || w > hi + tol) continue;
    const double cx = std::cos(w);
    const double cy = std::sin(w);
    const double denom = cross(ex, ey, cx, cy);
    if (std::abs(denom) <= 1e-14 * piece.length) continue;
    const double tau = -cross(dev.px, dev.py, cx, cy) / denom;
    if (!in_unit_range(tau, tol)) continue;
    emit(tau, w, true);
  }
}

}  // namespace

Line Line::chord(double d, double psi) {
  if (!(d > 0.0) || !std::isfinite(d) || !std::isfinite(psi)) {
    throw Error(ErrorCode::InvalidInput, "chord line needs finite d > 0");
  }
  return {LineKind::Chord, d, normalize_total_angle(psi)};
}

Line Line::apex(double phi_a, double phi_b) {
  if (!std::isfinite(phi_a) || !std::isfinite(phi_b)) {
    throw Error(ErrorCode::InvalidInput, "apex line needs finite ray angles");
  }
  double a = normalize_total_angle(phi_a);
  double b = normalize_total_angle(phi_b);
  if (circular_distance(a, b) < kPi - kEpsilon) {
    throw Error(ErrorCode::InvalidInput, "apex line rays must be at least pi apart");
  }
  if (b < a) std::swap(a, b);
  return {LineKind::Apex, a, b};
}

bool approx_equal(const Line& l1, const Line& l2, double eps) {
  if (l1.kind() != l2.kind()) return false;
  if (l1.is_chord()) return nearly_equal(l1.d(), l2.d(), eps) && angles_equal(l1.psi(), l2.psi(), eps);
  return (angles_equal(l1.phi_a(), l2.phi_a(), eps) && angles_equal(l1.phi_b(), l2.phi_b(), eps)) ||
         (angles_equal(l1.phi_a(), l2.phi_b(), eps) && angles_equal(l1.phi_b(), l2.phi_a(), eps));
}

Line line_through(const SurfacePoint& a, const SurfacePoint& b) {
  if (a == b) throw Error(ErrorCode::IdenticalPoints, "a line needs two distinct points");
  if (a.is_apex()) return Line::apex(b.phi(), opposite_ray(b.phi()));
  if (b.is_apex()) return Line::apex(a.phi(), opposite_ray(a.phi()));

  const double delta = angular_gap(a.phi(), b.phi()).delta_min;
  if (delta <= kEpsilon) return Line::apex(a.phi(), opposite_ray(a.phi()));
  // A chord through the apex within rounding is the straight apex line.
  if (delta >= kPi - kEpsilon) return Line::apex(a.phi(), b.phi());

  // Foot of the perpendicular from the apex, in the plane developed around a.
  const DevelopedPair dev = develop(a, b);
  const double ex = dev.qx - dev.px;
  const double ey = dev.qy - dev.py;
  const double len = std::hypot(ex, ey);
  const double ux = ex / len;
  const double uy = ey / len;
  const double along = dev.px * ux + dev.py * uy;
  const double fx = dev.px - along * ux;
  const double fy = dev.py - along * uy;
  const double d = a.r() * b.r() * std::abs(std::sin(dev.gap)) / len;
  return Line::chord(d, a.phi() + std::atan2(fy, fx));
}

bool on_line(const SurfacePoint& p, const Line& l, double eps) {
  if (l.is_apex()) {
    return p.is_apex() || angles_equal(p.phi(), l.phi_a(), eps) || angles_equal(p.phi(), l.phi_b(), eps);
  }
  if (p.is_apex()) return false;
  const double u = signed_gap(l.psi(), p.phi());
  if (std::abs(u) >= 0.5 * kPi) return false;
  return nearly_equal(p.r() * std::cos(u), l.d(), eps);
}

bool corresponds(const Line& l, const SurfacePoint& a, const SurfacePoint& b) {
  return approx_equal(line_through(a, b), l);
}

IntersectionResult line_intersection(const Line& l1, const Line& l2) {
  if (approx_equal(l1, l2)) return {IntersectionKind::Equal, {}, 0.0};

  if (l1.is_apex() && l2.is_apex()) {
    for (const double ray : {l1.phi_a(), l1.phi_b()}) {
      if (angles_equal(ray, l2.phi_a()) || angles_equal(ray, l2.phi_b())) {
        return {IntersectionKind::SharedRay, {}, ray};
      }
    }
    return {IntersectionKind::Point, SurfacePoint::apex(), 0.0};
  }

  if (l1.is_apex() != l2.is_apex()) {
    const Line& chord = l1.is_chord() ? l1 : l2;
    const Line& rays = l1.is_chord() ? l2 : l1;
    // Two rays at least pi apart never both fall in a window of width pi.
    for (const double ray : {rays.phi_a(), rays.phi_b()}) {
      const double u = signed_gap(chord.psi(), ray);
      if (std::abs(u) < 0.5 * kPi) {
        return {IntersectionKind::Point, SurfacePoint(chord.d() / std::cos(u), ray), 0.0};
      }
    }
    return {};
  }

  // Two chord lines. Their windows overlap in at most one arc, and over the
  // union of the windows both lines develop into one euclidean plane.
  const double u = signed_gap(l1.psi(), l2.psi());
  if (std::abs(u) >= kPi) return {};
  const double s = std::sin(u);
  if (std::abs(s) <= 1e-15) return {};
  const double x = l1.d();
  const double y = (l2.d() - l1.d() * std::cos(u)) / s;
  const double alpha = std::atan2(y, x);
  assert(std::abs(alpha - u) < 0.5 * kPi + 1e-9);
  return {IntersectionKind::Point, SurfacePoint(std::hypot(x, y), l1.psi() + alpha), 0.0};
}

Line line_through_point_direction(const SurfacePoint& p, double direction, Extension ext) {
  if (p.is_apex()) {
    throw Error(ErrorCode::ApexOrigin, "lines through the apex are given by their ray angles");
  }
  const double h = wrap_half_turn(direction - p.phi());
  const double sh = std::sin(h);
  if (std::abs(sh) <= kEpsilon) {
    return Line::apex(p.phi(), p.phi() + sign_of(ext) * kPi);
  }
  // p = (r, 0) with unit direction (cos h, sin h); foot = p - (p . u) u.
  const double r = p.r();
  const double fx = r * sh * sh;
  const double fy = -r * sh * std::cos(h);
  return Line::chord(r * std::abs(sh), p.phi() + std::atan2(fy, fx));
}

std::vector<SurfacePoint> segment_intersect_line(const Geodesic& g, const Line& l) {
  if (g.kind == GeodesicKind::Degenerate) {
    throw Error(ErrorCode::PreconditionViolation, "segment must be non-degenerate");
  }
  std::vector<Piece> pieces;
  if (g.kind == GeodesicKind::ApexPath) {
    pieces.push_back({g.from, SurfacePoint::apex(), 0.0, g.from.r()});
    pieces.push_back({SurfacePoint::apex(), g.to, g.from.r(), g.to.r()});
  } else {
    pieces.push_back({g.from, g.to, 0.0, g.length});
  }

  std::vector<Hit> hits;
  for (const Piece& piece : pieces) {
    const bool radial = piece.p0.is_apex() || piece.p1.is_apex() ||
                        angles_equal(piece.p0.phi(), piece.p1.phi());
    if (radial) {
      intersect_radial(piece, l, hits);
    } else {
      intersect_slanted(piece, l, hits);
    }
  }
  if (hits.empty()) return {};

  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t0 < b.t0; });
  const double tol = kEpsilon * std::max(1.0, g.length);
  std::vector<Hit> merged{hits.front()};
  for (std::size_t i = 1; i < hits.size(); ++i) {
    Hit& last = merged.back();
    if (hits[i].t0 <= last.t1 + tol) {
      if (hits[i].t1 > last.t1) {
        last.t1 = hits[i].t1;
        last.p1 = hits[i].p1;
      }
    } else {
      merged.push_back(hits[i]);
    }
  }

  std::vector<SurfacePoint> out;
  for (const Hit& h : merged) {
    out.push_back(h.p0);
    if (h.t1 - h.t0 > tol) out.push_back(h.p1);
  }
  return out;
}

Line transform_line(const Line& l, double rotation, double scale) {
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidInput, "scale must be positive");
  if (l.is_chord()) return Line::chord(l.d() * scale, l.psi() + rotation);
  return Line::apex(l.phi_a() + rotation, l.phi_b() + rotation);
}

SurfacePoint point_on_line(const Line& l, double t) {
  if (l.is_chord()) return {std::hypot(l.d(), t), l.psi() + std::atan2(t, l.d())};
  if (t > 0.0) return {t, l.phi_a()};
  if (t < 0.0) return {-t, l.phi_b()};
  return SurfacePoint::apex();
}

}  // namespace logeuclid
