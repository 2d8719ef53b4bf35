#include <logeuclid/models.hpp>

namespace logeuclid {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// --- log-euclidean ---------------------------------------------------------

SurfacePoint LogEuclideanModel::random_point(Rng& rng) const {
  const double r = rng.log_uniform(r_min_, r_max_);
  return {r, rng.uniform(0.0, kFourPi)};
}

std::array<SurfacePoint, 3> LogEuclideanModel::non_collinear_triple() const {
  return {SurfacePoint(1.0, 0.0), SurfacePoint(1.0, 0.5 * kPi), SurfacePoint(2.0, 0.25 * kPi)};
}

SurfacePoint LogEuclideanModel::interior_point(const Point& a, const Point& b, double fraction) const {
  const Geodesic g = geodesic(a, b);
  return geodesic_point_at(g, fraction * g.length);
}

MeetSummary LogEuclideanModel::meet(const Line& a, const Line& b) const {
  const IntersectionResult res = line_intersection(a, b);
  return {res.kind, logeuclid::to_json(res)};
}

bool LogEuclideanModel::segment_meets_line(const Point& a, const Point& b, const Line& l) const {
  if (a == b) return logeuclid::on_line(a, l);
  return !segment_intersect_line(geodesic(a, b), l).empty();
}

std::vector<Line> LogEuclideanModel::parallels(const Line& l, const Point& p, std::size_t max_count) const {
  std::vector<Line> out;
  auto consider = [&](const Line& cand) {
    if (out.size() >= max_count) return;
    if (line_intersection(cand, l).kind != IntersectionKind::Empty) return;
    for (const Line& seen : out) {
      if (seen == cand) return;
    }
    out.push_back(cand);
  };
  constexpr int kSweep = 256;
  if (p.is_apex()) {
    for (int i = 0; i < kSweep / 8 && out.size() < max_count; ++i) {
      for (int k = 0; k < 16; ++k) {
        const double a = kFourPi * i / (kSweep / 8);
        consider(Line::apex(a, a + kPi + kTwoPi * (k + 0.5) / 16));
      }
    }
    return out;
  }
  // Inside a chord's window every other line through p crosses it; only the
  // plain euclidean parallel is left, and the sweep below never hits it exactly.
  if (l.is_chord()) {
    const double off = signed_gap(l.psi(), p.phi());
    if (std::abs(off) < kPi / 2) {
      const double d = p.r() * std::cos(off);
      if (d > 0.0) consider(Line::chord(d, l.psi()));
    }
  }
  // Chord lines through p, one per direction modulo a half turn.
  for (int i = 0; i < kSweep && out.size() < max_count; ++i) {
    consider(line_through_point_direction(p, p.phi() + kPi * (i + 0.5) / kSweep, Extension::Plus));
  }
  for (int i = 0; i < kSweep && out.size() < max_count; ++i) {
    consider(Line::apex(p.phi(), p.phi() + kPi + kTwoPi * (i + 0.5) / kSweep));
  }
  return out;
}

// --- euclidean -------------------------------------------------------------

namespace {

double scale_of(const EuclideanPoint& p) { return std::max({1.0, std::abs(p.x), std::abs(p.y)}); }

double number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw Error(ErrorCode::InvalidInput, std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

}  // namespace

EuclideanLine EuclideanModel::normalized(double theta, double c) {
  theta = wrap_positive(theta, kTwoPi);
  if (theta >= kPi) {
    theta -= kPi;
    c = -c;
  }
  return {theta, c};
}

EuclideanPoint EuclideanModel::random_point(Rng& rng) const {
  const double r = rng.log_uniform(r_min_, r_max_);
  const double a = rng.uniform(0.0, kTwoPi);
  return {r * std::cos(a), r * std::sin(a)};
}

bool EuclideanModel::same_point(const Point& a, const Point& b) const {
  return std::hypot(a.x - b.x, a.y - b.y) <= kEpsilon * std::max(scale_of(a), scale_of(b));
}

bool EuclideanModel::same_line(const Line& a, const Line& b) const {
  const double diff = std::abs(a.theta - b.theta);
  if (diff <= kEpsilon) return nearly_equal(a.c, b.c);
  if (diff >= kPi - kEpsilon) return nearly_equal(a.c, -b.c);
  return false;
}

EuclideanLine EuclideanModel::line_through(const Point& a, const Point& b) const {
  if (same_point(a, b)) throw Error(ErrorCode::IdenticalPoints, "a line needs two distinct points");
  const double theta = std::atan2(b.y - a.y, b.x - a.x) + 0.5 * kPi;
  return normalized(theta, a.x * std::cos(theta) + a.y * std::sin(theta));
}

bool EuclideanModel::on_line(const Point& p, const Line& l) const {
  const double s = p.x * std::cos(l.theta) + p.y * std::sin(l.theta) - l.c;
  return std::abs(s) <= kEpsilon * std::max(scale_of(p), std::abs(l.c));
}

bool EuclideanModel::between(const Point& a, const Point& b, const Point& c) const {
  if (same_point(a, b) || same_point(b, c) || same_point(a, c)) return false;
  return nearly_equal(distance(a, b) + distance(b, c), distance(a, c));
}

EuclideanPoint EuclideanModel::point_on_line(const Line& l, double t) const {
  const double cs = std::cos(l.theta), sn = std::sin(l.theta);
  return {l.c * cs - t * sn, l.c * sn + t * cs};
}

EuclideanPoint EuclideanModel::interior_point(const Point& a, const Point& b, double fraction) const {
  return {a.x + fraction * (b.x - a.x), a.y + fraction * (b.y - a.y)};
}

EuclideanRay EuclideanModel::ray_through(const Point& o, const Point& t) const {
  if (same_point(o, t)) throw Error(ErrorCode::IdenticalPoints, "ray needs two distinct points");
  return {o, wrap_positive(std::atan2(t.y - o.y, t.x - o.x), kTwoPi)};
}

EuclideanPoint EuclideanModel::lay_off_segment(const Ray& ray, double len) const {
  if (!(len > 0.0) || !std::isfinite(len)) throw Error(ErrorCode::InvalidInput, "segment length must be positive");
  return {ray.origin.x + len * std::cos(ray.direction), ray.origin.y + len * std::sin(ray.direction)};
}

double EuclideanModel::angle_between(const Ray& a, const Ray& b) const {
  return std::abs(wrap_half_turn(b.direction - a.direction));
}

Side EuclideanModel::angle_side(const Ray& a, const Ray& b) const {
  return wrap_half_turn(b.direction - a.direction) > 0.0 ? Side::Plus : Side::Minus;
}

EuclideanRay EuclideanModel::lay_off_angle(const Ray& base, Side side, double m) const {
  if (!(m > 0.0 && m < kPi)) throw Error(ErrorCode::InvalidInput, "angle magnitude must lie in (0, pi)");
  const double sign = side == Side::Plus ? 1.0 : -1.0;
  return {base.origin, wrap_positive(base.direction + sign * m, kTwoPi)};
}

MeetSummary EuclideanModel::meet(const Line& a, const Line& b) const {
  const double det = std::sin(b.theta - a.theta);
  if (std::abs(det) <= 1e-12) {
    if (same_line(a, b)) return {IntersectionKind::Equal, {{"kind", "Equal"}}};
    return {IntersectionKind::Empty, {{"kind", "Empty"}}};
  }
  const double c1 = std::cos(a.theta), s1 = std::sin(a.theta);
  const double c2 = std::cos(b.theta), s2 = std::sin(b.theta);
  const Point p{(a.c * s2 - b.c * s1) / det, (c1 * b.c - c2 * a.c) / det};
  return {IntersectionKind::Point, {{"kind", "Point"}, {"point", to_json(p)}}};
}

bool EuclideanModel::segment_meets_line(const Point& a, const Point& b, const Line& l) const {
  const double cs = std::cos(l.theta), sn = std::sin(l.theta);
  const double sa = a.x * cs + a.y * sn - l.c;
  const double sb = b.x * cs + b.y * sn - l.c;
  const double tol = kEpsilon * std::max({scale_of(a), scale_of(b), std::abs(l.c)});
  return sa * sb <= 0.0 || std::abs(sa) <= tol || std::abs(sb) <= tol;
}

std::vector<EuclideanLine> EuclideanModel::parallels(const Line& l, const Point& p, std::size_t max_count) const {
  if (on_line(p, l)) throw Error(ErrorCode::PreconditionViolation, "point lies on the line");
  if (max_count == 0) return {};
  return {normalized(l.theta, p.x * std::cos(l.theta) + p.y * std::sin(l.theta))};
}

EuclideanPoint EuclideanModel::point_from_json(const Json& j) const { return {number(j, "x"), number(j, "y")}; }

EuclideanLine EuclideanModel::line_from_json(const Json& j) const {
  if (!j.is_object() || j.value("type", "") != "euclidean") {
    throw Error(ErrorCode::InvalidInput, "expected a euclidean line");
  }
  return normalized(number(j, "theta"), number(j, "c"));
}

}  // namespace logeuclid
