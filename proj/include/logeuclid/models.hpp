#pragma once

// Two interchangeable geometries for the axiom harness: the log-euclidean
// plane (delegating to the library) and the ordinary euclidean plane.

#include <logeuclid/congruence.hpp>
#include <logeuclid/json_io.hpp>

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace logeuclid {

/// mt19937_64 with a fixed mapping to doubles, so draws are identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double log_uniform(double lo, double hi) { return lo * std::exp(std::log(hi / lo) * uniform()); }
  bool coin() { return (eng_() >> 63) != 0; }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// What a line intersection looks like, stripped to what the suites use.
struct MeetSummary {
  IntersectionKind kind = IntersectionKind::Empty;
  Json detail;
};

template <class M>
concept GeometryModel = requires(const M& m, Rng& rng, const typename M::Point& p,
                                 const typename M::Line& l, const typename M::Ray& ray,
                                 const Json& j, double x) {
  { m.name() } -> std::convertible_to<std::string>;
  { m.random_point(rng) } -> std::same_as<typename M::Point>;
  { m.special_point() } -> std::same_as<typename M::Point>;
  { m.non_collinear_triple() } -> std::same_as<std::array<typename M::Point, 3>>;
  { m.same_point(p, p) } -> std::same_as<bool>;
  { m.same_line(l, l) } -> std::same_as<bool>;
  { m.line_through(p, p) } -> std::same_as<typename M::Line>;
  { m.on_line(p, l) } -> std::same_as<bool>;
  { m.corresponds(l, p, p) } -> std::same_as<bool>;
  { m.distance(p, p) } -> std::same_as<double>;
  { m.between(p, p, p) } -> std::same_as<bool>;
  { m.point_on_line(l, x) } -> std::same_as<typename M::Point>;
  { m.interior_point(p, p, x) } -> std::same_as<typename M::Point>;
  { m.ray_through(p, p) } -> std::same_as<typename M::Ray>;
  { m.lay_off_segment(ray, x) } -> std::same_as<typename M::Point>;
  { m.angle_between(ray, ray) } -> std::same_as<double>;
  { m.angle_side(ray, ray) } -> std::same_as<Side>;
  { m.lay_off_angle(ray, Side::Plus, x) } -> std::same_as<typename M::Ray>;
  { m.meet(l, l) } -> std::same_as<MeetSummary>;
  { m.segment_meets_line(p, p, l) } -> std::same_as<bool>;
  { m.parallels(l, p, 2) } -> std::same_as<std::vector<typename M::Line>>;
  { m.to_json(p) } -> std::same_as<Json>;
  { m.to_json(l) } -> std::same_as<Json>;
  { m.point_from_json(j) } -> std::same_as<typename M::Point>;
  { m.line_from_json(j) } -> std::same_as<typename M::Line>;
};

class LogEuclideanModel {
 public:
  using Point = SurfacePoint;
  using Line = logeuclid::Line;
  using Ray = logeuclid::Ray;

  LogEuclideanModel(double r_min = 0.05, double r_max = 20.0) : r_min_(r_min), r_max_(r_max) {}

  std::string name() const { return "log-euclidean"; }
  Point random_point(Rng& rng) const;
  Point special_point() const { return SurfacePoint::apex(); }
  std::array<Point, 3> non_collinear_triple() const;

  bool same_point(const Point& a, const Point& b) const { return a == b; }
  bool same_line(const Line& a, const Line& b) const { return a == b; }
  Line line_through(const Point& a, const Point& b) const { return logeuclid::line_through(a, b); }
  bool on_line(const Point& p, const Line& l) const { return logeuclid::on_line(p, l); }
  bool corresponds(const Line& l, const Point& a, const Point& b) const { return logeuclid::corresponds(l, a, b); }
  double distance(const Point& a, const Point& b) const { return logeuclid::distance(a, b); }
  bool between(const Point& a, const Point& b, const Point& c) const { return logeuclid::between(a, b, c); }
  Point point_on_line(const Line& l, double t) const { return logeuclid::point_on_line(l, t); }
  Point interior_point(const Point& a, const Point& b, double fraction) const;

  Ray ray_through(const Point& o, const Point& t) const { return logeuclid::ray_through(o, t); }
  Point lay_off_segment(const Ray& ray, double len) const { return logeuclid::lay_off_segment(ray, len); }
  double angle_between(const Ray& a, const Ray& b) const { return raw_angle_between(a, b); }
  Side angle_side(const Ray& a, const Ray& b) const { return logeuclid::angle_side({a.origin, a, b}); }
  Ray lay_off_angle(const Ray& base, Side side, double m) const { return logeuclid::lay_off_angle(base, side, m); }

  MeetSummary meet(const Line& a, const Line& b) const;
  bool segment_meets_line(const Point& a, const Point& b, const Line& l) const;
  /// Up to `max_count` distinct lines through p missing l, found by sweeping
  /// chord directions at p and then the far ray of apex lines through p.
  std::vector<Line> parallels(const Line& l, const Point& p, std::size_t max_count) const;

  Json to_json(const Point& p) const { return logeuclid::to_json(p); }
  Json to_json(const Line& l) const { return logeuclid::to_json(l); }
  Point point_from_json(const Json& j) const { return logeuclid::point_from_json(j); }
  Line line_from_json(const Json& j) const { return logeuclid::line_from_json(j); }

 private:
  double r_min_;
  double r_max_;
};

struct EuclideanPoint {
  double x = 0.0;
  double y = 0.0;
};

/// x cos(theta) + y sin(theta) = c with theta in [0, pi).
struct EuclideanLine {
  double theta = 0.0;
  double c = 0.0;
};

struct EuclideanRay {
  EuclideanPoint origin;
  double direction = 0.0;
};

class EuclideanModel {
 public:
  using Point = EuclideanPoint;
  using Line = EuclideanLine;
  using Ray = EuclideanRay;

  EuclideanModel(double r_min = 0.05, double r_max = 20.0) : r_min_(r_min), r_max_(r_max) {}

  std::string name() const { return "euclidean"; }
  Point random_point(Rng& rng) const;
  Point special_point() const { return {}; }
  std::array<Point, 3> non_collinear_triple() const { return {Point{1, 0}, Point{0, 1}, Point{1, 1}}; }

  bool same_point(const Point& a, const Point& b) const;
  bool same_line(const Line& a, const Line& b) const;
  Line line_through(const Point& a, const Point& b) const;
  bool on_line(const Point& p, const Line& l) const;
  bool corresponds(const Line& l, const Point& a, const Point& b) const { return same_line(line_through(a, b), l); }
  double distance(const Point& a, const Point& b) const { return std::hypot(a.x - b.x, a.y - b.y); }
  bool between(const Point& a, const Point& b, const Point& c) const;
  Point point_on_line(const Line& l, double t) const;
  Point interior_point(const Point& a, const Point& b, double fraction) const;

  Ray ray_through(const Point& o, const Point& t) const;
  Point lay_off_segment(const Ray& ray, double len) const;
  double angle_between(const Ray& a, const Ray& b) const;
  Side angle_side(const Ray& a, const Ray& b) const;
  Ray lay_off_angle(const Ray& base, Side side, double m) const;

  MeetSummary meet(const Line& a, const Line& b) const;
  bool segment_meets_line(const Point& a, const Point& b, const Line& l) const;
  /// The single parallel through p.
  std::vector<Line> parallels(const Line& l, const Point& p, std::size_t max_count) const;

  Json to_json(const Point& p) const { return {{"x", p.x}, {"y", p.y}}; }
  Json to_json(const Line& l) const { return {{"type", "euclidean"}, {"theta", l.theta}, {"c", l.c}}; }
  Point point_from_json(const Json& j) const;
  Line line_from_json(const Json& j) const;

 private:
  static Line normalized(double theta, double c);

  double r_min_;
  double r_max_;
};

static_assert(GeometryModel<LogEuclideanModel>);
static_assert(GeometryModel<EuclideanModel>);

}  // namespace logeuclid
