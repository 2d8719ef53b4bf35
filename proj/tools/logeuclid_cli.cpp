// Command-line front end. Exit codes: 0 success, 1 verdict mismatch,
// 2 usage or input error.

#include <logeuclid/harness.hpp>
#include <logeuclid/oracle.hpp>
#include <logeuclid/render.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace logeuclid;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

SurfacePoint parse_point(const std::string& text) {
  if (text == "apex") return SurfacePoint::apex();
  return point_from_json(parse_json(text));
}

Line parse_line(const std::string& text) { return line_from_json(parse_json(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

struct MeshOptions {
  double r_min = 0.02;
  double r_max = 20.0;
  int rings = 128;
  int angular = 1024;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--mesh-rmin", r_min, "Innermost ring radius")->capture_default_str();
    cmd->add_option("--mesh-rmax", r_max, "Outermost ring radius")->capture_default_str();
    cmd->add_option("--rings", rings, "Number of rings")->capture_default_str();
    cmd->add_option("--angular", angular, "Nodes per ring")->capture_default_str();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of the log-euclidean plane and Hilbert axiom checks"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string p_text, q_text, l1_text, l2_text;
  bool with_oracle = false;
  MeshOptions mesh_opts;

  auto* dist = app.add_subcommand("dist", "Distance between two points");
  dist->add_option("p", p_text, "Point JSON or 'apex'")->required();
  dist->add_option("q", q_text, "Point JSON or 'apex'")->required();
  dist->add_flag("--oracle", with_oracle, "Also print the mesh distance");
  mesh_opts.add_to(dist);

  auto* geo = app.add_subcommand("geodesic", "Shortest path between two points");
  geo->add_option("p", p_text)->required();
  geo->add_option("q", q_text)->required();

  auto* line = app.add_subcommand("line", "Line corresponding to two points");
  line->add_option("p", p_text)->required();
  line->add_option("q", q_text)->required();

  auto* meet = app.add_subcommand("meet", "Intersection of two lines");
  meet->add_option("l1", l1_text, "Line JSON")->required();
  meet->add_option("l2", l2_text, "Line JSON")->required();

  std::string model_text = "log-euclidean", axioms_text = "all", out_path;
  std::uint64_t seed = 42;
  std::size_t trials = 100000;
  auto* axioms = app.add_subcommand("axioms", "Run the axiom suites");
  axioms->add_option("--model", model_text)->check(CLI::IsMember({"log-euclidean", "euclidean"}))->capture_default_str();
  axioms->add_option("--seed", seed)->capture_default_str();
  axioms->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
  axioms->add_option("--axioms", axioms_text, "'all' or comma separated ids")->capture_default_str();
  axioms->add_option("--out", out_path, "Report file (default stdout)");

  std::string ce_name, verify_path;
  auto* ce = app.add_subcommand("counterexample", "Emit a named counterexample witness");
  ce->add_option("name", ce_name, "thm1 | i2bis | i2weak | sas | parallels");
  ce->add_option("--verify", verify_path, "Verify a witness file instead");

  auto* odist = app.add_subcommand("oracle-dist", "Mesh shortest path next to the exact distance");
  odist->add_option("p", p_text)->required();
  odist->add_option("q", q_text)->required();
  mesh_opts.add_to(odist);

  std::string spec_path, render_out;
  bool per_sheet = false;
  auto* render = app.add_subcommand("render", "Draw a render spec or a witness as SVG");
  render->add_option("spec", spec_path, "Render spec or witness JSON file")->required();
  render->add_option("--out", render_out, "SVG file (default: spec 'output' or stdout)");
  render->add_flag("--per-sheet", per_sheet, "Use the per-sheet view for witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist) {
      const SurfacePoint p = parse_point(p_text), q = parse_point(q_text);
      const double d = distance(p, q);
      if (!with_oracle) {
        std::cout << fixed6(d) << "\n";
      } else {
        const ConeMesh mesh(mesh_opts.r_min, mesh_opts.r_max, mesh_opts.rings, mesh_opts.angular);
        const double m = mesh_distance(mesh, p, q);
        std::cout << "exact  " << fixed6(d) << "\noracle " << fixed6(m) << "\ngap    "
                  << fixed6(d > 0.0 ? (m - d) / d : m) << "\n";
      }
    } else if (*geo) {
      std::cout << to_json(geodesic(parse_point(p_text), parse_point(q_text))).dump(2) << "\n";
    } else if (*line) {
      std::cout << to_json(line_through(parse_point(p_text), parse_point(q_text))).dump(2) << "\n";
    } else if (*meet) {
      std::cout << to_json(line_intersection(parse_line(l1_text), parse_line(l2_text))).dump(2) << "\n";
    } else if (*axioms) {
      const ModelKind model = parse_model(model_text);
      TrialConfig cfg;
      cfg.master_seed = seed;
      cfg.n_trials = trials;
      const auto reports = run_axiom_suite(model, cfg, parse_axiom_list(axioms_text));
      write_output(out_path, reports_to_json(reports).dump(2) + "\n");
      for (const auto& r : reports) {
        std::cerr << axiom_name(r.axiom) << ": " << r.failures << "/" << r.trials << " failures, expected "
                  << to_string(r.expected) << (r.matches_expected() ? "" : "  MISMATCH") << "\n";
        if (!r.matches_expected()) exit_code = kExitMismatch;
      }
    } else if (*ce) {
      if (!verify_path.empty()) {
        const bool ok = verify_counterexample(parse_json(read_file(verify_path)));
        std::cout << (ok ? "verified" : "not verified") << "\n";
        return ok ? 0 : kExitMismatch;
      }
      Json w;
      if (ce_name == "thm1") {
        w = theorem1_counterexample();
      } else if (ce_name == "i2bis") {
        w = i2bis_counterexample();
      } else if (ce_name == "i2weak") {
        w = weak_i2_counterexample();
      } else if (ce_name == "sas") {
        w = sas_counterexample();
      } else if (ce_name == "parallels") {
        w = parallels_counterexample();
      } else {
        std::cerr << "unknown counterexample '" << ce_name << "'\n";
        return kExitUsage;
      }
      std::cout << w.dump(2) << "\n";
    } else if (*odist) {
      const SurfacePoint p = parse_point(p_text), q = parse_point(q_text);
      const ConeMesh mesh(mesh_opts.r_min, mesh_opts.r_max, mesh_opts.rings, mesh_opts.angular);
      const MeshRoute route = mesh_route(mesh, p, q);
      const double d = distance(p, q);
      Json out{{"exact", d},
               {"oracle", route.length},
               {"relative_gap", d > 0.0 ? (route.length - d) / d : route.length},
               {"visits_apex", route.visits_apex},
               {"mesh", {{"r_min", mesh.r_min()}, {"r_max", mesh.r_max()}, {"rings", mesh.rings()},
                         {"angular", mesh.angular()}, {"nodes", mesh.node_count()}}}};
      std::cout << out.dump(2) << "\n";
    } else if (*render) {
      const Json j = parse_json(read_file(spec_path));
      const RenderSpec spec = j.is_object() && j.contains("counterexample")
                                  ? render_spec_from_witness(j, per_sheet ? Projection::PerSheet : Projection::Uniformized)
                                  : render_spec_from_json(j);
      write_output(render_out.empty() ? spec.output : render_out, render_svg(spec));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
