#include <logeuclid/render.hpp>

#include <algorithm>
#include <cstdio>

namespace logeuclid {

namespace {

constexpr double kPanel = 480.0;
constexpr double kMargin = 20.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

const char* kSheetColors[2] = {"#2b6cb0", "#c05621"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Canvas {
  const RenderSpec& spec;
  double extent;
  std::string body;

  int panels() const { return spec.projection == Projection::PerSheet ? 2 : 1; }
  double width() const { return panels() * (kPanel + 2 * kMargin); }
  double height() const { return kPanel + 2 * kMargin; }

  // Panel index and pixel position of a surface point.
  struct Pixel {
    int panel;
    double x, y;
  };

  Pixel place(const SurfacePoint& p) const {
    double u, v, half;
    int panel = 0;
    if (spec.projection == Projection::Uniformized) {
      const auto uv = uniformize(p);
      u = uv[0];
      v = uv[1];
      half = std::sqrt(extent);
    } else {
      if (!p.is_apex()) {
        const ChartCoord c = to_chart(p);
        panel = c.sheet - 1;
        u = c.r * std::cos(c.theta);
        v = c.r * std::sin(c.theta);
      } else {
        u = v = 0.0;
      }
      half = extent;
    }
    const double s = 0.5 * kPanel / half;
    const double x0 = panel * (kPanel + 2 * kMargin) + kMargin + 0.5 * kPanel;
    const double y0 = kMargin + 0.5 * kPanel;
    return {panel, x0 + s * u, y0 - s * v};
  }

  Pixel centre(int panel) const {
    return {panel, panel * (kPanel + 2 * kMargin) + kMargin + 0.5 * kPanel, kMargin + 0.5 * kPanel};
  }

  void polyline(const std::vector<SurfacePoint>& pts, const std::string& color) {
    std::vector<Pixel> run;
    auto flush = [&] {
      if (run.size() >= 2) {
        body += "  <polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) {
          if (i) body += ' ';
          body += fmt(run[i].x) + "," + fmt(run[i].y);
        }
        body += "\"/>\n";
      }
      run.clear();
    };
    bool after_apex = false;
    for (const SurfacePoint& p : pts) {
      if (p.is_apex()) {
        if (!run.empty()) run.push_back(centre(run.back().panel));
        after_apex = true;
        continue;
      }
      const Pixel px = place(p);
      // Crossing the slit or the apex may switch charts.
      if (!run.empty() && px.panel != run.back().panel) flush();
      if (run.empty() && after_apex) run.push_back(centre(px.panel));
      after_apex = false;
      run.push_back(px);
    }
    flush();
  }

  void marker(const SurfacePoint& p, const std::string& color, const std::string& label) {
    const Pixel px = place(p);
    body += "  <circle cx=\"" + fmt(px.x) + "\" cy=\"" + fmt(px.y) + "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
    if (!label.empty()) {
      body += "  <text x=\"" + fmt(px.x + 6) + "\" y=\"" + fmt(px.y - 6) +
              "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(label) + "</text>\n";
    }
  }
};

std::vector<SurfacePoint> sample_line(const Line& l, double extent) {
  std::vector<SurfacePoint> out;
  double span = extent;
  if (l.is_chord()) {
    if (l.d() >= extent) return out;
    span = std::sqrt(extent * extent - l.d() * l.d());
  }
  for (int i = 0; i <= kCurveSamples; ++i) {
    out.push_back(point_on_line(l, -span + 2.0 * span * i / kCurveSamples));
  }
  return out;
}

std::vector<SurfacePoint> sample_geodesic(const SurfacePoint& a, const SurfacePoint& b) {
  const Geodesic g = geodesic(a, b);
  std::vector<SurfacePoint> out;
  if (g.kind == GeodesicKind::Degenerate) return {a};
  for (int i = 0; i < kCurveSamples; ++i) {
    out.push_back(geodesic_point_at(g, g.length * i / (kCurveSamples - 1)));
  }
  return out;
}

double natural_extent(const RenderSpec& spec) {
  double r = 0.0;
  for (const auto& e : spec.elements) {
    switch (e.kind) {
      case RenderElement::Kind::Point: r = std::max(r, e.point.r()); break;
      case RenderElement::Kind::Geodesic: r = std::max({r, e.point.r(), e.to.r()}); break;
      case RenderElement::Kind::Line: r = std::max(r, e.line.is_chord() ? 2.0 * e.line.d() : 1.0); break;
    }
  }
  return std::max(1.0, 1.25 * r);
}

std::string text(const Json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw Error(ErrorCode::InvalidInput, std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

void collect(const Json& j, const std::string& key, RenderSpec& spec) {
  if (j.is_object()) {
    if (j.contains("r") && j.contains("phi")) {
      RenderElement e;
      e.point = point_from_json(j);
      e.label = key;
      e.color = "#222222";
      spec.elements.push_back(e);
      return;
    }
    if (j.contains("type") && (j.at("type") == "chord" || j.at("type") == "apex")) {
      RenderElement e;
      e.kind = RenderElement::Kind::Line;
      e.line = line_from_json(j);
      e.color = spec.elements.size() % 2 ? "#b7312c" : "#2f855a";
      spec.elements.push_back(e);
      return;
    }
    for (const auto& [k, v] : j.items()) collect(v, k, spec);
  } else if (j.is_array()) {
    for (const auto& v : j) collect(v, key, spec);
  }
}

}  // namespace

std::array<double, 2> uniformize(const SurfacePoint& p) {
  const double s = std::sqrt(p.r());
  return {s * std::cos(0.5 * p.phi()), s * std::sin(0.5 * p.phi())};
}

RenderSpec render_spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "render spec must be an object");
  RenderSpec spec;
  const std::string proj = text(j, "projection", "uniformized");
  if (proj == "uniformized") {
    spec.projection = Projection::Uniformized;
  } else if (proj == "per-sheet") {
    spec.projection = Projection::PerSheet;
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown projection '" + proj + "'");
  }
  if (j.contains("extent")) {
    if (!j.at("extent").is_number() || !(j.at("extent").get<double>() > 0.0)) {
      throw Error(ErrorCode::InvalidInput, "extent must be a positive number");
    }
    spec.extent = j.at("extent").get<double>();
  }
  spec.output = text(j, "output", "");
  if (!j.contains("elements")) return spec;
  if (!j.at("elements").is_array()) throw Error(ErrorCode::InvalidInput, "elements must be an array");
  for (const Json& item : j.at("elements")) {
    if (!item.is_object()) throw Error(ErrorCode::InvalidInput, "element must be an object");
    RenderElement e;
    const std::string kind = text(item, "kind", "");
    if (kind == "point") {
      if (!item.contains("point")) throw Error(ErrorCode::InvalidInput, "point element needs 'point'");
      e.point = point_from_json(item.at("point"));
    } else if (kind == "line") {
      if (!item.contains("line")) throw Error(ErrorCode::InvalidInput, "line element needs 'line'");
      e.kind = RenderElement::Kind::Line;
      e.line = line_from_json(item.at("line"));
    } else if (kind == "geodesic") {
      if (!item.contains("from") || !item.contains("to")) {
        throw Error(ErrorCode::InvalidInput, "geodesic element needs 'from' and 'to'");
      }
      e.kind = RenderElement::Kind::Geodesic;
      e.point = point_from_json(item.at("from"));
      e.to = point_from_json(item.at("to"));
    } else {
      throw Error(ErrorCode::InvalidInput, "unknown element kind '" + kind + "'");
    }
    e.label = text(item, "label", "");
    e.color = text(item, "color", e.color);
    spec.elements.push_back(e);
  }
  return spec;
}

RenderSpec render_spec_from_witness(const Json& witness, Projection projection) {
  RenderSpec spec;
  spec.projection = projection;
  collect(witness, "", spec);
  // Lines first so markers stay on top.
  std::stable_partition(spec.elements.begin(), spec.elements.end(),
                        [](const RenderElement& e) { return e.kind != RenderElement::Kind::Point; });
  return spec;
}

std::string render_svg(const RenderSpec& spec) {
  Canvas c{spec, spec.extent > 0.0 ? spec.extent : natural_extent(spec), {}};
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(c.width()) + "\" height=\"" + fmt(c.height()) +
         "\" viewBox=\"0 0 " + fmt(c.width()) + " " + fmt(c.height()) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int panel = 0; panel < c.panels(); ++panel) {
    const double x = panel * (kPanel + 2 * kMargin) + kMargin;
    const std::string tint = c.panels() == 2 ? kSheetColors[panel] : "#888888";
    out += "  <rect x=\"" + fmt(x) + "\" y=\"" + fmt(kMargin) + "\" width=\"" + fmt(kPanel) + "\" height=\"" +
           fmt(kPanel) + "\" fill=\"none\" stroke=\"" + tint + "\"/>\n";
    if (c.panels() == 2) {
      out += "  <text x=\"" + fmt(x + 6) + "\" y=\"" + fmt(kMargin + 16) +
             "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + tint + "\">sheet " +
             std::to_string(panel + 1) + "</text>\n";
      // The slit along the negative real axis.
      const double cy = kMargin + 0.5 * kPanel;
      out += "  <line x1=\"" + fmt(x) + "\" y1=\"" + fmt(cy) + "\" x2=\"" + fmt(x + 0.5 * kPanel) + "\" y2=\"" +
             fmt(cy) + "\" stroke=\"" + tint + "\" stroke-dasharray=\"4 3\"/>\n";
    }
  }
  for (const auto& e : spec.elements) {
    switch (e.kind) {
      case RenderElement::Kind::Line: c.polyline(sample_line(e.line, c.extent), e.color); break;
      case RenderElement::Kind::Geodesic: c.polyline(sample_geodesic(e.point, e.to), e.color); break;
      case RenderElement::Kind::Point: break;
    }
  }
  for (const auto& e : spec.elements) {
    if (e.kind == RenderElement::Kind::Point) c.marker(e.point, e.color, e.label);
  }
  // Apex marker in every panel.
  for (int panel = 0; panel < c.panels(); ++panel) {
    const double cx = panel * (kPanel + 2 * kMargin) + kMargin + 0.5 * kPanel;
    const double cy = kMargin + 0.5 * kPanel;
    c.body += "  <path d=\"M" + fmt(cx - 5) + "," + fmt(cy - 5) + " L" + fmt(cx + 5) + "," + fmt(cy + 5) + " M" +
              fmt(cx - 5) + "," + fmt(cy + 5) + " L" + fmt(cx + 5) + "," + fmt(cy - 5) +
              "\" stroke=\"black\" stroke-width=\"1.5\" class=\"apex\"/>\n";
  }
  out += c.body;
  out += "</svg>\n";
  return out;
}

}  // namespace logeuclid
