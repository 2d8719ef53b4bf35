#include <logeuclid/harness.hpp>

#include <algorithm>
#include <array>
#include <functional>

namespace logeuclid {

namespace {

struct AxiomInfo {
  AxiomId id;
  const char* name;
};

constexpr std::array<AxiomInfo, 17> kAxioms{{
    {AxiomId::I1, "I-1"},
    {AxiomId::I2, "I-2"},
    {AxiomId::I2bis, "I-2bis"},
    {AxiomId::I2weak, "I-2weak"},
    {AxiomId::I3, "I-3"},
    {AxiomId::II1, "II-1"},
    {AxiomId::II2, "II-2"},
    {AxiomId::II3, "II-3"},
    {AxiomId::II4Pasch, "II-4-Pasch"},
    {AxiomId::III1, "III-1"},
    {AxiomId::III2, "III-2"},
    {AxiomId::III3, "III-3"},
    {AxiomId::III4, "III-4"},
    {AxiomId::III5, "III-5"},
    {AxiomId::IV1, "IV-1"},
    {AxiomId::VArchimedes, "V-Archimedes"},
    {AxiomId::Thm1, "Thm1"},
}};

template <GeometryModel M>
struct Instance {
  std::vector<typename M::Point> points;
  std::vector<typename M::Line> lines;
  std::vector<double> scalars;
};

struct Outcome {
  bool holds = true;
  Json certificate = Json::object();
};

Outcome vacuous() { return {true, {{"vacuous", true}}}; }

// --- sampling helpers ------------------------------------------------------

template <GeometryModel M>
typename M::Point fresh_point(const M& m, Rng& rng, std::initializer_list<typename M::Point> avoid) {
  for (;;) {
    auto p = m.random_point(rng);
    if (std::none_of(avoid.begin(), avoid.end(), [&](const auto& q) { return m.same_point(p, q); })) return p;
  }
}

template <GeometryModel M>
typename M::Line random_line(const M& m, Rng& rng, bool through_special) {
  const auto a = through_special ? m.special_point() : m.random_point(rng);
  return m.line_through(a, fresh_point(m, rng, {a}));
}

// Signed arc-length parameter, bounded away from the line's base point.
double line_param(Rng& rng, int sign = 0) {
  const double t = rng.uniform(0.05, 20.0);
  if (sign == 0) return rng.coin() ? t : -t;
  return sign > 0 ? t : -t;
}

Side side_from(double s) { return s >= 0.5 ? Side::Plus : Side::Minus; }

template <GeometryModel M>
bool collinear(const M& m, const typename M::Point& a, const typename M::Point& b, const typename M::Point& c) {
  if (m.same_point(a, b) || m.same_point(b, c) || m.same_point(a, c)) return true;
  const auto l = m.line_through(a, b);
  return m.corresponds(l, a, c) && m.corresponds(l, b, c);
}

// Angle at v towards a and b.
template <GeometryModel M>
double vertex_angle(const M& m, const typename M::Point& v, const typename M::Point& a, const typename M::Point& b) {
  return m.angle_between(m.ray_through(v, a), m.ray_through(v, b));
}

template <GeometryModel M>
bool on_ray(const M& m, const typename M::Point& o, const typename M::Point& t, const typename M::Point& x) {
  return m.same_point(x, t) || m.between(o, x, t) || m.between(o, t, x);
}

template <GeometryModel M>
Json points_json(const M& m, const std::vector<typename M::Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(m.to_json(p));
  return out;
}

// --- generators ------------------------------------------------------------
// Every instance stores only primitive draws; constructions happen in check()
// so a witness replays from its JSON alone.

template <GeometryModel M>
Instance<M> generate(AxiomId id, const M& m, Rng& rng, std::size_t trial) {
  Instance<M> in;
  const auto sp = m.special_point();
  const bool inject = trial % 8 == 0;
  const bool inject_alt = trial % 8 == 4;
  switch (id) {
    case AxiomId::I1:
    case AxiomId::I2: {
      const auto a = inject ? sp : m.random_point(rng);
      in.points = {a, fresh_point(m, rng, {a})};
      break;
    }
    case AxiomId::I2bis:
    case AxiomId::I2weak:
    case AxiomId::II3: {
      in.lines = {random_line(m, rng, inject)};
      const int n = id == AxiomId::I2bis ? 4 : 3;
      for (int i = 0; i < n; ++i) in.scalars.push_back(line_param(rng));
      break;
    }
    case AxiomId::I3: {
      in.lines = {random_line(m, rng, inject)};
      for (int sign : {1, -1, 1, -1}) in.scalars.push_back(line_param(rng, sign));
      break;
    }
    case AxiomId::II1: {
      const auto a = inject ? sp : m.random_point(rng);
      in.points = {a, fresh_point(m, rng, {a})};
      in.scalars = {rng.uniform(0.02, 0.98)};
      break;
    }
    case AxiomId::II2: {
      auto a = inject ? sp : m.random_point(rng);
      auto c = inject_alt ? sp : fresh_point(m, rng, {a});
      if (inject_alt) a = fresh_point(m, rng, {c});
      in.points = {a, c};
      in.scalars = {rng.log_uniform(0.05, 10.0)};
      break;
    }
    case AxiomId::II4Pasch: {
      for (;;) {
        const auto a = m.random_point(rng);
        const auto b = fresh_point(m, rng, {a});
        const auto c = fresh_point(m, rng, {a, b});
        if (collinear(m, a, b, c)) continue;
        in.points = {a, b, c, inject ? sp : m.random_point(rng)};
        break;
      }
      in.scalars = {rng.uniform(0.02, 0.98)};
      break;
    }
    case AxiomId::III1: {
      const auto a = m.random_point(rng);
      const auto b = fresh_point(m, rng, {a});
      const auto o = inject ? sp : m.random_point(rng);
      const auto t = inject_alt ? sp : fresh_point(m, rng, {o});
      in.points = {a, b, inject_alt ? fresh_point(m, rng, {t}) : o, t};
      break;
    }
    case AxiomId::III2: {
      const auto a = m.random_point(rng);
      const auto b = fresh_point(m, rng, {a});
      const auto o1 = inject ? sp : m.random_point(rng);
      const auto t1 = fresh_point(m, rng, {o1});
      const auto o2 = m.random_point(rng);
      const auto t2 = inject_alt ? sp : fresh_point(m, rng, {o2});
      in.points = {a, b, o1, t1, m.same_point(o2, t2) ? fresh_point(m, rng, {t2}) : o2, t2};
      break;
    }
    case AxiomId::III3: {
      const auto a = inject ? sp : m.random_point(rng);
      const auto c = fresh_point(m, rng, {a});
      const auto o = inject_alt ? sp : m.random_point(rng);
      in.points = {a, c, o, fresh_point(m, rng, {o})};
      in.scalars = {rng.uniform(0.02, 0.98)};
      break;
    }
    case AxiomId::III4: {
      const auto o = inject ? sp : m.random_point(rng);
      const auto h = fresh_point(m, rng, {o});
      const auto k = fresh_point(m, rng, {o, h});
      const auto o2 = inject_alt ? sp : m.random_point(rng);
      in.points = {o, h, k, o2, fresh_point(m, rng, {o2})};
      in.scalars = {rng.uniform()};
      break;
    }
    case AxiomId::III5: {
      for (;;) {
        const auto a = trial % 4 == 0 ? sp : m.random_point(rng);
        const auto b = fresh_point(m, rng, {a});
        const auto c = fresh_point(m, rng, {a, b});
        if (collinear(m, a, b, c)) continue;
        const auto a2 = m.random_point(rng);
        in.points = {a, b, c, a2, fresh_point(m, rng, {a2})};
        break;
      }
      in.scalars = {rng.uniform()};
      break;
    }
    case AxiomId::IV1: {
      in.lines = {random_line(m, rng, inject)};
      in.points = {inject_alt ? sp : m.random_point(rng)};
      break;
    }
    case AxiomId::VArchimedes: {
      const auto a = inject ? sp : m.random_point(rng);
      const auto b = fresh_point(m, rng, {a});
      const auto c = m.random_point(rng);
      in.points = {a, b, c, fresh_point(m, rng, {c})};
      break;
    }
    case AxiomId::Thm1: {
      const auto a = m.random_point(rng);
      const auto b = fresh_point(m, rng, {a});
      in.points = {a, b, trial % 2 == 0 ? sp : fresh_point(m, rng, {a})};
      break;
    }
  }
  return in;
}

// --- predicates ------------------------------------------------------------

template <GeometryModel M>
Outcome check(AxiomId id, const M& m, const Instance<M>& in) {
  const auto& p = in.points;
  const auto& s = in.scalars;
  auto cong = [](double x, double y) { return nearly_equal(x, y); };
  switch (id) {
    case AxiomId::I1: {
      const auto l = m.line_through(p[0], p[1]);
      return {m.corresponds(l, p[0], p[1]) && m.on_line(p[0], l) && m.on_line(p[1], l), {{"line", m.to_json(l)}}};
    }
    case AxiomId::I2: {
      const auto l1 = m.line_through(p[0], p[1]);
      const auto l2 = m.line_through(p[0], p[1]);
      const auto l3 = m.line_through(p[1], p[0]);
      return {m.same_line(l1, l2) && m.same_line(l1, l3), {{"line_ab", m.to_json(l1)}, {"line_ba", m.to_json(l3)}}};
    }
    case AxiomId::I2bis: {
      const auto& a = in.lines[0];
      std::vector<typename M::Point> q;
      for (double t : s) q.push_back(m.point_on_line(a, t));
      if (m.same_point(q[0], q[1]) || m.same_point(q[0], q[2]) || m.same_point(q[1], q[3])) return vacuous();
      const bool premise = m.corresponds(a, q[0], q[2]) && m.corresponds(a, q[1], q[3]);
      if (!premise) return vacuous();
      return {m.corresponds(a, q[0], q[1]),
              {{"A", m.to_json(q[0])}, {"B", m.to_json(q[1])}, {"C", m.to_json(q[2])}, {"D", m.to_json(q[3])},
               {"line_AB", m.to_json(m.line_through(q[0], q[1]))}}};
    }
    case AxiomId::I2weak: {
      const auto& a = in.lines[0];
      std::vector<typename M::Point> q;
      for (double t : s) q.push_back(m.point_on_line(a, t));
      if (m.same_point(q[0], q[1]) || m.same_point(q[0], q[2]) || m.same_point(q[1], q[2])) return vacuous();
      if (!(m.corresponds(a, q[0], q[1]) && m.corresponds(a, q[0], q[2]))) return vacuous();
      return {m.corresponds(a, q[1], q[2]),
              {{"A", m.to_json(q[0])}, {"B", m.to_json(q[1])}, {"C", m.to_json(q[2])},
               {"line_BC", m.to_json(m.line_through(q[1], q[2]))}}};
    }
    case AxiomId::I3: {
      const auto& l = in.lines[0];
      std::vector<typename M::Point> q;
      for (double t : s) q.push_back(m.point_on_line(l, t));
      const bool pair1 = !m.same_point(q[0], q[1]) && m.corresponds(l, q[0], q[1]);
      const bool pair2 = !m.same_point(q[2], q[3]) && m.corresponds(l, q[2], q[3]);
      const auto tri = m.non_collinear_triple();
      const bool spread = !collinear(m, tri[0], tri[1], tri[2]);
      return {pair1 && pair2 && spread, {{"pair1", pair1}, {"pair2", pair2}, {"triple", spread}}};
    }
    case AxiomId::II1: {
      const auto b = m.interior_point(p[0], p[1], s[0]);
      const auto l = m.line_through(p[0], p[1]);
      const bool ok = m.between(p[0], b, p[1]) && m.between(p[1], b, p[0]) && m.on_line(p[0], l) &&
                      m.on_line(b, l) && m.on_line(p[1], l);
      return {ok, {{"B", m.to_json(b)}, {"line", m.to_json(l)}}};
    }
    case AxiomId::II2: {
      const auto b = m.lay_off_segment(m.ray_through(p[0], p[1]), m.distance(p[0], p[1]) + s[0]);
      const auto l = m.line_through(p[0], p[1]);
      return {m.between(p[0], p[1], b) && m.on_line(b, l), {{"B", m.to_json(b)}, {"line", m.to_json(l)}}};
    }
    case AxiomId::II3: {
      const auto& l = in.lines[0];
      std::vector<typename M::Point> q;
      for (double t : s) q.push_back(m.point_on_line(l, t));
      if (m.same_point(q[0], q[1]) || m.same_point(q[1], q[2]) || m.same_point(q[0], q[2])) return vacuous();
      const int count = int(m.between(q[0], q[1], q[2])) + int(m.between(q[1], q[0], q[2])) +
                        int(m.between(q[0], q[2], q[1]));
      return {count <= 1, {{"between_count", count}, {"points", points_json<M>(m, q)}}};
    }
    case AxiomId::II4Pasch: {
      const auto& [a, b, c] = std::tie(p[0], p[1], p[2]);
      const auto x = m.interior_point(a, b, s[0]);
      if (m.same_point(x, p[3])) return vacuous();
      const auto l = m.line_through(x, p[3]);
      if (m.on_line(a, l) || m.on_line(b, l) || m.on_line(c, l)) return vacuous();
      const bool ok = m.segment_meets_line(a, c, l) || m.segment_meets_line(b, c, l);
      return {ok, {{"P", m.to_json(x)}, {"line", m.to_json(l)}}};
    }
    case AxiomId::III1: {
      const double len = m.distance(p[0], p[1]);
      const auto b2 = m.lay_off_segment(m.ray_through(p[2], p[3]), len);
      const bool ok = on_ray(m, p[2], p[3], b2) && cong(m.distance(p[2], b2), len);
      return {ok, {{"B2", m.to_json(b2)}, {"length", len}}};
    }
    case AxiomId::III2: {
      const double len = m.distance(p[0], p[1]);
      const auto b1 = m.lay_off_segment(m.ray_through(p[2], p[3]), len);
      const auto b2 = m.lay_off_segment(m.ray_through(p[4], p[5]), len);
      const double d1 = m.distance(p[2], b1);
      const double d2 = m.distance(p[4], b2);
      return {cong(d1, len) && cong(d2, len) && cong(d1, d2), {{"d1", d1}, {"d2", d2}}};
    }
    case AxiomId::III3: {
      const auto b = m.interior_point(p[0], p[1], s[0]);
      const double l1 = m.distance(p[0], b);
      const double l2 = m.distance(b, p[1]);
      const auto ray = m.ray_through(p[2], p[3]);
      const auto b2 = m.lay_off_segment(ray, l1);
      const auto c2 = m.lay_off_segment(ray, l1 + l2);
      const bool premise = m.between(p[0], b, p[1]) && m.between(p[2], b2, c2) &&
                           cong(m.distance(p[2], b2), l1) && cong(m.distance(b2, c2), l2);
      const double ac = m.distance(p[0], p[1]);
      const double ac2 = m.distance(p[2], c2);
      return {premise && cong(ac, ac2), {{"premise", premise}, {"AC", ac}, {"A2C2", ac2}}};
    }
    case AxiomId::III4: {
      const double mag = vertex_angle(m, p[0], p[1], p[2]);
      if (mag <= kEpsilon || mag >= kPi - kEpsilon) return vacuous();
      const Side side = side_from(s[0]);
      const auto h = m.ray_through(p[3], p[4]);
      const auto k = m.lay_off_angle(h, side, mag);
      const double back = m.angle_between(h, k);
      return {cong(back, mag) && m.angle_side(h, k) == side, {{"magnitude", mag}, {"transported", back}}};
    }
    case AxiomId::III5: {
      const auto& [a, b, c] = std::tie(p[0], p[1], p[2]);
      const double mag = vertex_angle(m, a, b, c);
      if (mag <= kEpsilon || mag >= kPi - kEpsilon) return vacuous();
      const auto b2 = m.lay_off_segment(m.ray_through(p[3], p[4]), m.distance(a, b));
      const auto side_c = m.lay_off_angle(m.ray_through(p[3], b2), side_from(s[0]), mag);
      const auto c2 = m.lay_off_segment(side_c, m.distance(a, c));
      const bool premise = cong(m.distance(p[3], b2), m.distance(a, b)) &&
                           cong(m.distance(p[3], c2), m.distance(a, c)) &&
                           cong(vertex_angle(m, p[3], b2, c2), mag);
      if (!premise) return vacuous();
      const double ang_b = vertex_angle(m, b, a, c);
      const double ang_b2 = vertex_angle(m, b2, p[3], c2);
      const double bc = m.distance(b, c);
      const double bc2 = m.distance(b2, c2);
      return {cong(ang_b, ang_b2) && cong(bc, bc2),
              {{"B2", m.to_json(b2)}, {"C2", m.to_json(c2)}, {"angle_B", ang_b}, {"angle_B2", ang_b2},
               {"BC", bc}, {"B2C2", bc2}}};
    }
    case AxiomId::IV1: {
      const auto& l = in.lines[0];
      if (m.on_line(p[0], l)) return vacuous();
      const auto found = m.parallels(l, p[0], 2);
      Json lines = Json::array();
      for (const auto& f : found) lines.push_back(m.to_json(f));
      return {found.size() <= 1, {{"parallels", lines}}};
    }
    case AxiomId::VArchimedes: {
      const double ab = m.distance(p[0], p[1]);
      const double cd = m.distance(p[2], p[3]);
      const long n = archimedes_steps(ab, cd);
      const auto end = m.lay_off_segment(m.ray_through(p[0], p[1]), static_cast<double>(n) * cd);
      return {static_cast<double>(n) * cd > ab && m.between(p[0], p[1], end), {{"n", n}, {"end", m.to_json(end)}}};
    }
    case AxiomId::Thm1: {
      const auto a = m.line_through(p[0], p[1]);
      const auto b = m.line_through(p[0], p[2]);
      const MeetSummary meet = m.meet(a, b);
      return {meet.kind != IntersectionKind::SharedRay,
              {{"line_a", m.to_json(a)}, {"line_b", m.to_json(b)}, {"intersection", meet.detail}}};
    }
  }
  throw Error(ErrorCode::UnsupportedAxiom, "unknown axiom");
}

template <GeometryModel M>
Outcome safe_check(AxiomId id, const M& m, const Instance<M>& in) {
  try {
    return check(id, m, in);
  } catch (const Error& e) {
    return {false, {{"error", e.what()}}};
  }
}

template <GeometryModel M>
Json witness_json(AxiomId id, const M& m, std::size_t trial, const Instance<M>& in, const Outcome& out) {
  Json lines = Json::array();
  for (const auto& l : in.lines) lines.push_back(m.to_json(l));
  return {{"axiom", axiom_name(id)},  {"model", m.name()},      {"trial", trial},
          {"points", points_json<M>(m, in.points)}, {"lines", lines}, {"scalars", in.scalars},
          {"certificate", out.certificate}};
}

template <GeometryModel M>
Instance<M> instance_from_json(const M& m, const Json& w) {
  Instance<M> in;
  for (const auto& j : w.at("points")) in.points.push_back(m.point_from_json(j));
  for (const auto& j : w.at("lines")) in.lines.push_back(m.line_from_json(j));
  for (const auto& j : w.at("scalars")) in.scalars.push_back(j.get<double>());
  return in;
}

std::size_t expected_points(AxiomId id) {
  switch (id) {
    case AxiomId::I1: case AxiomId::I2: case AxiomId::II1: case AxiomId::II2: return 2;
    case AxiomId::I2bis: case AxiomId::I2weak: case AxiomId::I3: case AxiomId::II3: return 0;
    case AxiomId::II4Pasch: case AxiomId::III1: case AxiomId::III3: case AxiomId::VArchimedes: return 4;
    case AxiomId::III2: return 6;
    case AxiomId::III4: case AxiomId::III5: return 5;
    case AxiomId::IV1: return 1;
    case AxiomId::Thm1: return 3;
  }
  return 0;
}

std::size_t expected_lines(AxiomId id) {
  switch (id) {
    case AxiomId::I2bis: case AxiomId::I2weak: case AxiomId::I3: case AxiomId::II3: case AxiomId::IV1: return 1;
    default: return 0;
  }
}

std::size_t expected_scalars(AxiomId id) {
  switch (id) {
    case AxiomId::I2bis: case AxiomId::I3: return 4;
    case AxiomId::I2weak: case AxiomId::II3: return 3;
    case AxiomId::II1: case AxiomId::II2: case AxiomId::II4Pasch: case AxiomId::III3:
    case AxiomId::III4: case AxiomId::III5: return 1;
    default: return 0;
  }
}

template <GeometryModel M>
bool replay(const M& m, AxiomId id, const Json& w) {
  const Instance<M> in = instance_from_json(m, w);
  if (in.points.size() != expected_points(id) || in.lines.size() != expected_lines(id) ||
      in.scalars.size() != expected_scalars(id)) {
    throw Error(ErrorCode::MalformedWitness, "wrong number of points, lines or scalars");
  }
  return !safe_check(id, m, in).holds;
}

template <GeometryModel M>
AxiomReport run_one(const M& m, ModelKind kind, const TrialConfig& cfg, AxiomId id) {
  AxiomReport report;
  report.axiom = id;
  report.model = m.name();
  report.trials = cfg.n_trials;
  report.seed = cfg.master_seed;
  report.expected = expected_status(kind, id);
  for (std::size_t t = 0; t < cfg.n_trials; ++t) {
    Rng rng(trial_seed(cfg.master_seed, id, t));
    const Instance<M> in = generate(id, m, rng, t);
    const Outcome out = safe_check(id, m, in);
    if (out.holds) {
      if (out.certificate.contains("vacuous")) ++report.vacuous;
      continue;
    }
    ++report.failures;
    if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(witness_json(id, m, t, in, out));
  }
  return report;
}

// --- named witnesses ---------------------------------------------------------

Json field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::MalformedWitness, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

SurfacePoint wpoint(const Json& j, const char* key) { return point_from_json(field(j, key)); }
Line wline(const Json& j, const char* key) { return line_from_json(field(j, key)); }

bool verify_thm1(const Json& w) {
  const Json pts = field(w, "points");
  const SurfacePoint a = wpoint(pts, "A"), b = wpoint(pts, "B"), o = wpoint(pts, "O"), q = wpoint(pts, "P");
  const Json lines = field(w, "lines");
  const Line la = wline(lines, "a"), lb = wline(lines, "b");
  const IntersectionResult res = line_intersection(la, lb);
  const Json cert = field(w, "certificate");
  const bool kind_ok = res.kind == IntersectionKind::SharedRay &&
                       field(cert, "kind").get<std::string>() == "SharedRay" &&
                       angles_equal(res.ray_phi, field(cert, "ray_phi").get<double>());
  return !(la == lb) && corresponds(la, a, b) && corresponds(lb, a, o) && !(a == q) && on_line(a, la) &&
         on_line(a, lb) && on_line(q, la) && on_line(q, lb) && kind_ok;
}

bool verify_i2bis(const Json& w) {
  const Line l = wline(w, "line");
  const Json pts = field(w, "points");
  const SurfacePoint a = wpoint(pts, "A"), b = wpoint(pts, "B"), c = wpoint(pts, "C"), d = wpoint(pts, "D");
  return !(a == b) && !(a == c) && !(b == d) && corresponds(l, a, c) && corresponds(l, b, d) && !corresponds(l, a, b);
}

bool verify_i2weak(const Json& w) {
  const Line l = wline(w, "line");
  const Json pts = field(w, "points");
  const SurfacePoint a = wpoint(pts, "A"), b = wpoint(pts, "B"), c = wpoint(pts, "C");
  return !(a == b) && !(a == c) && !(b == c) && corresponds(l, a, b) && corresponds(l, a, c) && !corresponds(l, b, c);
}

Triangle wtriangle(const Json& j) {
  const Json v = field(j, "vertices");
  if (!v.is_array() || v.size() != 3) throw Error(ErrorCode::MalformedWitness, "a triangle needs three vertices");
  return triangle_data(point_from_json(v[0]), point_from_json(v[1]), point_from_json(v[2]));
}

bool verify_sas(const Json& w) {
  const Triangle t1 = wtriangle(field(w, "triangle1"));
  const Triangle t2 = wtriangle(field(w, "triangle2"));
  // Sides 2 and 1 meet at vertex 0; side 0 is the third side.
  return congruent_segments(t1.sides[2].length, t2.sides[2].length) &&
         congruent_segments(t1.sides[1].length, t2.sides[1].length) &&
         congruent_angles(t1.angles[0], t2.angles[0]) &&
         !congruent_segments(t1.sides[0].length, t2.sides[0].length);
}

bool verify_parallels(const Json& w) {
  const Line l = wline(w, "line");
  const SurfacePoint p = wpoint(w, "point");
  const Json list = field(w, "parallels");
  if (!list.is_array() || list.size() < 2 || on_line(p, l)) return false;
  std::vector<Line> seen;
  for (const Json& j : list) {
    const Line cand = line_from_json(j);
    if (!on_line(p, cand) || line_intersection(cand, l).kind != IntersectionKind::Empty) return false;
    for (const Line& other : seen) {
      if (other == cand) return false;
    }
    seen.push_back(cand);
  }
  return true;
}

Json transform_node(const Json& j, double rotation, double scale) {
  if (j.is_object()) {
    if (j.contains("r") && j.contains("phi")) {
      return to_json(transform_point(point_from_json(j), rotation, scale));
    }
    if (j.contains("type") && j.at("type").is_string() && j.at("type") != "euclidean") {
      return to_json(transform_line(line_from_json(j), rotation, scale));
    }
    Json out = Json::object();
    for (const auto& [key, value] : j.items()) {
      if (key == "ray_phi" && value.is_number()) {
        out[key] = normalize_total_angle(value.get<double>() + rotation);
      } else {
        out[key] = transform_node(value, rotation, scale);
      }
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(transform_node(v, rotation, scale));
    return out;
  }
  return j;
}

}  // namespace

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> ids = [] {
    std::vector<AxiomId> out;
    for (const auto& info : kAxioms) out.push_back(info.id);
    return out;
  }();
  return ids;
}

std::string axiom_name(AxiomId id) {
  for (const auto& info : kAxioms) {
    if (info.id == id) return info.name;
  }
  throw Error(ErrorCode::UnsupportedAxiom, "unknown axiom id");
}

AxiomId parse_axiom(std::string_view name) {
  for (const auto& info : kAxioms) {
    if (name == info.name) return info.id;
  }
  throw Error(ErrorCode::UnsupportedAxiom, "unsupported axiom '" + std::string(name) + "'");
}

std::vector<AxiomId> parse_axiom_list(std::string_view list) {
  if (list == "all") return all_axioms();
  std::vector<AxiomId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view item = list.substr(start, comma - start);
    if (!item.empty()) {
      const AxiomId id = parse_axiom(item);
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
    start = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::UnsupportedAxiom, "no axioms selected");
  return out;
}

std::string model_name(ModelKind kind) { return kind == ModelKind::LogEuclidean ? "log-euclidean" : "euclidean"; }

ModelKind parse_model(std::string_view name) {
  if (name == "log-euclidean") return ModelKind::LogEuclidean;
  if (name == "euclidean") return ModelKind::Euclidean;
  throw Error(ErrorCode::InvalidInput, "unknown model '" + std::string(name) + "'");
}

std::string to_string(ExpectedStatus status) {
  switch (status) {
    case ExpectedStatus::Holds: return "holds";
    case ExpectedStatus::Fails: return "fails";
    case ExpectedStatus::ReportOnly: return "report-only";
  }
  return "holds";
}

ExpectedStatus expected_status(ModelKind model, AxiomId axiom) {
  if (model == ModelKind::Euclidean) return ExpectedStatus::Holds;
  switch (axiom) {
    case AxiomId::Thm1:
    case AxiomId::I2bis:
    case AxiomId::I2weak:
    case AxiomId::III5:
    case AxiomId::IV1:
      return ExpectedStatus::Fails;
    case AxiomId::III4:
      return ExpectedStatus::ReportOnly;
    default:
      return ExpectedStatus::Holds;
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, AxiomId axiom, std::size_t trial) {
  const std::uint64_t stream = splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(axiom) + 1));
  return splitmix64(stream + static_cast<std::uint64_t>(trial));
}

bool AxiomReport::matches_expected() const {
  switch (expected) {
    case ExpectedStatus::Holds: return failures == 0;
    case ExpectedStatus::Fails:
      return failures > 0 && std::all_of(witnesses.begin(), witnesses.end(),
                                         [](const Json& w) { return verify_counterexample(w); });
    case ExpectedStatus::ReportOnly: return true;
  }
  return false;
}

Json to_json(const AxiomReport& report) {
  return {{"axiom", axiom_name(report.axiom)},
          {"model", report.model},
          {"trials", report.trials},
          {"failures", report.failures},
          {"vacuous", report.vacuous},
          {"seed", report.seed},
          {"witnesses", report.witnesses},
          {"expected", to_string(report.expected)},
          {"matches_expected", report.matches_expected()}};
}

Json reports_to_json(const std::vector<AxiomReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::vector<AxiomReport> run_axiom_suite(ModelKind model, const TrialConfig& cfg, const std::vector<AxiomId>& axioms) {
  if (cfg.n_trials == 0) throw Error(ErrorCode::InvalidInput, "need at least one trial");
  if (!(cfg.r_min > 0.0) || !(cfg.r_max > cfg.r_min)) throw Error(ErrorCode::InvalidInput, "need 0 < r_min < r_max");
  std::vector<AxiomReport> out;
  for (AxiomId id : axioms) {
    if (model == ModelKind::LogEuclidean) {
      out.push_back(run_one(LogEuclideanModel(cfg.r_min, cfg.r_max), model, cfg, id));
    } else {
      out.push_back(run_one(EuclideanModel(cfg.r_min, cfg.r_max), model, cfg, id));
    }
  }
  return out;
}

Json theorem1_counterexample() {
  const SurfacePoint a(1.0, 0.0), b(1.0, 1.5 * kPi), p(2.0, 0.0);
  const SurfacePoint o = SurfacePoint::apex();
  const Line la = line_through(a, b);
  const Line lb = line_through(a, o);
  const IntersectionResult res = line_intersection(la, lb);
  return {{"counterexample", "thm1"},
          {"points", {{"A", to_json(a)}, {"B", to_json(b)}, {"O", to_json(o)}, {"P", to_json(p)}}},
          {"lines", {{"a", to_json(la)}, {"b", to_json(lb)}}},
          {"certificate", to_json(res)}};
}

Json i2bis_counterexample() {
  const SurfacePoint a(1.0, 0.0), b(2.0, 0.0), c(1.0, 1.5 * kPi), d(2.0, 1.5 * kPi);
  const Line l = Line::apex(0.0, 1.5 * kPi);
  return {{"counterexample", "i2bis"},
          {"line", to_json(l)},
          {"points", {{"A", to_json(a)}, {"B", to_json(b)}, {"C", to_json(c)}, {"D", to_json(d)}}},
          {"line_AB", to_json(line_through(a, b))}};
}

Json weak_i2_counterexample() {
  const SurfacePoint a(1.0, 0.0), b(1.0, 1.5 * kPi), c(2.0, 1.5 * kPi);
  const Line l = Line::apex(0.0, 1.5 * kPi);
  return {{"counterexample", "i2weak"},
          {"line", to_json(l)},
          {"points", {{"A", to_json(a)}, {"B", to_json(b)}, {"C", to_json(c)}}},
          {"line_BC", to_json(line_through(b, c))}};
}

Json sas_counterexample() {
  const SurfacePoint a = SurfacePoint::apex(), b(1.0, 0.0), c(1.0, 1.5 * kPi);
  // Same two sides and included angle, vertex away from the apex.
  const double open = 0.75 * kPi;
  const SurfacePoint a2(10.0, 0.0);
  const SurfacePoint b2 = from_cartesian(1, 10.0, 1.0);
  const SurfacePoint c2 = from_cartesian(1, 10.0 + std::cos(0.5 * kPi + open), std::sin(0.5 * kPi + open));
  const Triangle t1 = triangle_data(a, b, c);
  const Triangle t2 = triangle_data(a2, b2, c2);
  return {{"counterexample", "sas"},
          {"triangle1", to_json(t1)},
          {"triangle2", to_json(t2)},
          {"third_sides", {t1.sides[0].length, t2.sides[0].length}},
          {"third_side_gap", std::abs(t1.sides[0].length - t2.sides[0].length)}};
}

std::vector<Line> parallels_witness(const Line& l, const SurfacePoint& p, std::size_t k) {
  return parallels_witness(LogEuclideanModel(), l, p, k);
}

Json parallels_counterexample() {
  const Line l = Line::chord(1.0, 0.0);
  const SurfacePoint p(1.0, kTwoPi);
  Json lines = Json::array();
  for (const Line& f : parallels_witness(l, p, 10)) lines.push_back(to_json(f));
  return {{"counterexample", "parallels"}, {"line", to_json(l)}, {"point", to_json(p)}, {"parallels", lines}};
}

bool verify_counterexample(const Json& w) {
  try {
    if (!w.is_object()) throw Error(ErrorCode::MalformedWitness, "witness must be an object");
    if (w.contains("counterexample")) {
      const std::string name = field(w, "counterexample").get<std::string>();
      if (name == "thm1") return verify_thm1(w);
      if (name == "i2bis") return verify_i2bis(w);
      if (name == "i2weak") return verify_i2weak(w);
      if (name == "sas") return verify_sas(w);
      if (name == "parallels") return verify_parallels(w);
      throw Error(ErrorCode::MalformedWitness, "unknown counterexample '" + name + "'");
    }
    const AxiomId id = parse_axiom(field(w, "axiom").get<std::string>());
    const ModelKind model = parse_model(field(w, "model").get<std::string>());
    if (model == ModelKind::LogEuclidean) return replay(LogEuclideanModel(), id, w);
    return replay(EuclideanModel(), id, w);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedWitness, e.what());
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::MalformedWitness: throw;
      case ErrorCode::InvalidInput:
      case ErrorCode::UnsupportedAxiom: throw Error(ErrorCode::MalformedWitness, e.what());
      // A well-formed witness whose construction no longer goes through.
      default: return false;
    }
  }
}

Json transform_witness(const Json& witness, double rotation, double scale) {
  return transform_node(witness, rotation, scale);
}

}  // namespace logeuclid
