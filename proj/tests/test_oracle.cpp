#include <logeuclid/models.hpp>
#include <logeuclid/oracle.hpp>

#include <doctest.h>

#include <algorithm>
#include <queue>
#include <vector>

using namespace logeuclid;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

TEST_CASE("build_mesh sizes and resolution errors") {
  const ConeMesh m = build_mesh(0.1, 10.0, 64, 256);
  CHECK(m.node_count() == 16385);
  CHECK(m.ring_radius(0) == doctest::Approx(0.1));
  CHECK(m.ring_radius(63) == doctest::Approx(10.0));
  CHECK(code_of([] { build_mesh(0.1, 10.0, 64, 100); }) == ErrorCode::InvalidResolution);
  CHECK(code_of([] { build_mesh(1.0, 0.5, 64, 256); }) == ErrorCode::InvalidResolution);
  CHECK(code_of([] { build_mesh(0.1, 10.0, 8, 256); }) == ErrorCode::InvalidResolution);
  CHECK(code_of([] { build_mesh(0.0, 10.0, 64, 256); }) == ErrorCode::InvalidResolution);
}

TEST_CASE("mesh edges are short positive chords and the graph is connected") {
  const ConeMesh m = build_mesh(0.1, 10.0, 32, 128);
  std::vector<char> seen(m.node_count(), 0);
  std::queue<std::int32_t> todo;
  todo.push(m.apex_node());
  seen[m.apex_node()] = 1;
  std::size_t reached = 1, half_edges = 0;
  while (!todo.empty()) {
    const std::int32_t id = todo.front();
    todo.pop();
    const SurfacePoint a = m.node_point(id);
    for (const auto& e : m.neighbors(id)) {
      ++half_edges;
      const SurfacePoint b = m.node_point(e.to);
      REQUIRE(e.weight > 0.0);
      if (!a.is_apex() && !b.is_apex()) REQUIRE(angular_gap(a.phi(), b.phi()).delta_min < kPi / 2);
      // Checked against the closed form here only; the search never uses it.
      REQUIRE(e.weight == doctest::Approx(distance(a, b)).epsilon(1e-12));
      if (!seen[e.to]) {
        seen[e.to] = 1;
        ++reached;
        todo.push(e.to);
      }
    }
  }
  CHECK(reached == m.node_count());
  CHECK(half_edges == 2 * m.edge_count());
}

TEST_CASE("mesh_distance examples") {
  const ConeMesh m = build_mesh(0.02, 10.0, 128, 1024);
  CHECK(mesh_distance(m, SurfacePoint::apex(), {1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
  const double opposite = mesh_distance(m, {1.0, 0.0}, {1.0, kTwoPi});
  CHECK(std::abs(opposite - 2.0) / 2.0 <= 0.02);
  const double quarter = mesh_distance(m, {1.0, 0.0}, {1.0, kPi / 2});
  CHECK(std::abs(quarter - std::sqrt(2.0)) / std::sqrt(2.0) <= 0.02);
  CHECK(mesh_distance(m, {3.0, 1.0}, {3.0, 1.0}) == 0.0);
  CHECK(code_of([&] { mesh_distance(m, {20.0, 0.0}, {1.0, 0.0}); }) == ErrorCode::OutOfMeshRange);
  CHECK(code_of([&] { mesh_distance(m, {0.01, 0.0}, {1.0, 0.0}); }) == ErrorCode::OutOfMeshRange);
}

TEST_CASE("upper bound, apex certificate and convergence under refinement") {
  // Two doublings apart; one doubling moves the median by less than its noise
  // on a sample this small.
  const ConeMesh coarse = build_mesh(0.02, 10.0, 16, 128);
  const ConeMesh fine = build_mesh(0.02, 10.0, 64, 512);
  Rng rng(41);
  std::vector<double> gap_coarse, gap_fine;
  for (int i = 0; i < 300; ++i) {
    const SurfacePoint p(rng.log_uniform(0.1, 10.0), rng.uniform(0.0, kFourPi));
    const SurfacePoint q(rng.log_uniform(0.1, 10.0), rng.uniform(0.0, kFourPi));
    const double d = distance(p, q);
    const MeshRoute a = mesh_route(coarse, p, q), b = mesh_route(fine, p, q);
    REQUIRE(a.length >= d - 1e-9);
    REQUIRE(b.length >= d - 1e-9);
    if (angular_gap(p.phi(), q.phi()).delta_min > kPi + 0.1) {
      REQUIRE(a.visits_apex);
      REQUIRE(b.visits_apex);
    }
    gap_coarse.push_back((a.length - d) / d);
    gap_fine.push_back((b.length - d) / d);
  }
  CHECK(median(gap_fine) < median(gap_coarse));
}

TEST_CASE("landmark distances are computed once and shared by copies") {
  const ConeMesh m = build_mesh(0.1, 10.0, 16, 64);
  const ConeMesh copy = m;
  const auto& a = m.landmarks();
  const auto& b = copy.landmarks();
  CHECK(&a == &b);
  CHECK(a.dist.size() == a.count * m.node_count());
}

TEST_CASE("path_length") {
  const std::vector<SurfacePoint> broken{{1.0, 0.0}, SurfacePoint::apex(), {1.0, 1.5 * kPi}};
  CHECK(path_length(broken) == doctest::Approx(2.0));
  const std::vector<SurfacePoint> radial{{1.0, 0.0}, {2.0, 0.0}};
  CHECK(path_length(radial) == doctest::Approx(1.0));
  const std::vector<SurfacePoint> jump{{1.0, 0.0}, {1.0, kTwoPi}};
  CHECK(code_of([&] { path_length(jump); }) == ErrorCode::NonLocalStep);
}
