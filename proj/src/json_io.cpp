#include <logeuclid/json_io.hpp>

namespace logeuclid {

namespace {

double number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw Error(ErrorCode::InvalidInput, std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

}  // namespace

SurfacePoint point_from_json(const Json& j) {
  if (j.is_object() && j.contains("sheet")) {
    if (!j.at("sheet").is_number_integer()) throw Error(ErrorCode::InvalidInput, "sheet must be 1 or 2");
    const int sheet = j.at("sheet").get<int>();
    if (sheet != 1 && sheet != 2) throw Error(ErrorCode::InvalidInput, "sheet must be 1 or 2");
    return from_cartesian(sheet, number(j, "x"), number(j, "y"));
  }
  return {number(j, "r"), number(j, "phi")};
}

Json to_json(const SurfacePoint& p) { return {{"r", p.r()}, {"phi", p.phi()}}; }

Line line_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw Error(ErrorCode::InvalidInput, "line needs a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "chord") return Line::chord(number(j, "d"), number(j, "psi"));
  if (type == "apex") return Line::apex(number(j, "phi_a"), number(j, "phi_b"));
  throw Error(ErrorCode::InvalidInput, "unknown line type '" + type + "'");
}

Json to_json(const Line& l) {
  if (l.is_chord()) return {{"type", "chord"}, {"d", l.d()}, {"psi", l.psi()}};
  return {{"type", "apex"}, {"phi_a", l.phi_a()}, {"phi_b", l.phi_b()}};
}

std::string to_string(GeodesicKind kind) {
  switch (kind) {
    case GeodesicKind::Chord: return "Chord";
    case GeodesicKind::ApexPath: return "ApexPath";
    case GeodesicKind::Degenerate: return "Degenerate";
  }
  return "Degenerate";
}

std::string to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::Empty: return "Empty";
    case IntersectionKind::Point: return "Point";
    case IntersectionKind::SharedRay: return "SharedRay";
    case IntersectionKind::Equal: return "Equal";
  }
  return "Empty";
}

Json to_json(const Geodesic& g) {
  return {{"kind", to_string(g.kind)}, {"from", to_json(g.from)}, {"to", to_json(g.to)}, {"length", g.length}};
}

Json to_json(const IntersectionResult& res) {
  Json j{{"kind", to_string(res.kind)}};
  if (res.kind == IntersectionKind::Point) j["point"] = to_json(res.point);
  if (res.kind == IntersectionKind::SharedRay) j["ray_phi"] = res.ray_phi;
  return j;
}

Json to_json(const Triangle& t) {
  Json j{{"vertices", Json::array()}, {"sides", Json::array()}, {"angles", Json::array()}};
  for (int i = 0; i < 3; ++i) {
    j["vertices"].push_back(to_json(t.vertices[i]));
    j["sides"].push_back(t.sides[i].length);
    j["angles"].push_back(t.angles[i]);
  }
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace logeuclid
