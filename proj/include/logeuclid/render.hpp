#pragma once

// Static SVG pictures of configurations on the log-euclidean plane.
//
// The uniformized view maps (r, phi) to sqrt(r) * (cos(phi/2), sin(phi/2)),
// which shows both sheets at once without overlap. The per-sheet view draws
// the two charts side by side.

#include <logeuclid/json_io.hpp>

#include <array>
#include <string>
#include <vector>

namespace logeuclid {

enum class Projection { Uniformized, PerSheet };

struct RenderElement {
  enum class Kind { Point, Line, Geodesic };
  Kind kind = Kind::Point;
  SurfacePoint point;  ///< Point; Geodesic start
  SurfacePoint to;     ///< Geodesic end
  Line line = Line::chord(1.0, 0.0);
  std::string label;
  std::string color = "#1f4e79";
};

struct RenderSpec {
  Projection projection = Projection::Uniformized;
  std::vector<RenderElement> elements;
  double extent = 0.0;  ///< largest radius shown; 0 picks one from the elements
  std::string output;   ///< optional default output path
};

inline constexpr int kCurveSamples = 128;

std::array<double, 2> uniformize(const SurfacePoint& p);

/// {"projection", "extent", "output", "elements":[{"kind":"point"|"line"|"geodesic", ...}]}.
/// Throws InvalidInput.
RenderSpec render_spec_from_json(const Json& j);

/// Every point and line found anywhere in a witness, in document order.
RenderSpec render_spec_from_witness(const Json& witness, Projection projection);

/// Deterministic SVG text; coordinates printed with three decimals.
std::string render_svg(const RenderSpec& spec);

}  // namespace logeuclid
