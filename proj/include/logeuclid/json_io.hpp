#pragma once

// JSON forms shared by the CLI, the witnesses and the bindings.

#include <logeuclid/congruence.hpp>

#include <json.hpp>

#include <string>

namespace logeuclid {

using Json = nlohmann::json;

/// Accepts {"r","phi"} or {"sheet","x","y"}. Throws InvalidInput otherwise.
SurfacePoint point_from_json(const Json& j);
Json to_json(const SurfacePoint& p);

/// {"type":"chord","d","psi"} or {"type":"apex","phi_a","phi_b"}.
Line line_from_json(const Json& j);
Json to_json(const Line& l);

std::string to_string(GeodesicKind kind);
std::string to_string(IntersectionKind kind);

Json to_json(const Geodesic& g);
Json to_json(const IntersectionResult& res);
Json to_json(const Triangle& t);

/// Parses text, mapping syntax errors to InvalidInput.
Json parse_json(const std::string& text);

}  // namespace logeuclid
