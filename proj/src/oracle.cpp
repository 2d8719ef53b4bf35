#include <logeuclid/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <string>

namespace logeuclid {

namespace {

// Angular reach of the stencil per ring offset at 1024 nodes per ring. Both
// grow like the square root of the angular count, so refining the mesh also
// refines the set of edge directions and the anisotropy error shrinks.
constexpr int kReachOneRing = 9;
constexpr int kReachTwoRings = 5;

int scaled_reach(int base, int n_angular) {
  return std::max(2, static_cast<int>(std::lround(base * std::sqrt(n_angular / 1024.0))));
}
// Outer-ring nodes whose graph distances feed the A* bound.
constexpr int kLandmarks = 16;

std::vector<StencilOffset> make_stencil(int reach_one, int reach_two) {
  std::vector<StencilOffset> out;
  auto add = [&](int dk, int reach) {
    for (int dj = -reach; dj <= reach; ++dj) {
      if (std::gcd(dk, std::abs(dj)) != 1) continue;
      out.push_back({dk, dj});
    }
  };
  add(0, 1);
  for (int dk : {1, -1}) add(dk, reach_one);
  for (int dk : {2, -2}) add(dk, reach_two);
  return out;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double ConeMesh::chord(double r1, double r2, double dtheta) {
  const double dr = r1 - r2;
  const double s = std::sin(0.5 * dtheta);
  return std::sqrt(dr * dr + 4.0 * r1 * r2 * s * s);
}

ConeMesh::ConeMesh(double r_min, double r_max, int n_rings, int n_angular)
    : n_rings_(n_rings), n_angular_(n_angular), landmarks_(std::make_shared<LandmarkCache>()) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw Error(ErrorCode::InvalidResolution, "need 0 < r_min < r_max");
  }
  if (n_rings < 16) throw Error(ErrorCode::InvalidResolution, "need at least 16 rings");
  if (n_angular < 64 || n_angular % 8 != 0) {
    throw Error(ErrorCode::InvalidResolution, "angular count must be >= 64 and divisible by 8");
  }
  step_ = kFourPi / n_angular;
  log_rho_ = std::log(r_max / r_min) / (n_rings - 1);
  radii_.resize(n_rings);
  for (int k = 0; k < n_rings; ++k) radii_[k] = r_min * std::exp(log_rho_ * k);
  radii_.back() = r_max;
  cos_.resize(n_angular);
  sin_.resize(n_angular);
  for (int j = 0; j < n_angular; ++j) {
    cos_[j] = std::cos(j * step_);
    sin_[j] = std::sin(j * step_);
  }

  reach_ = scaled_reach(kReachOneRing, n_angular);
  stencil_ = make_stencil(reach_, scaled_reach(kReachTwoRings, n_angular));
  weights_.assign(static_cast<std::size_t>(n_rings) * stencil_.size(), kInf);
  for (int k = 0; k < n_rings; ++k) {
    for (std::size_t s = 0; s < stencil_.size(); ++s) {
      const int k2 = k + stencil_[s].dk;
      if (k2 < 0 || k2 >= n_rings) continue;
      weights_[k * stencil_.size() + s] = chord(radii_[k], radii_[k2], stencil_[s].dj * step_);
    }
  }
}

ConeMesh build_mesh(double r_min, double r_max, int n_rings, int n_angular) {
  return ConeMesh(r_min, r_max, n_rings, n_angular);
}

std::int32_t ConeMesh::node(int ring, int j) const {
  j %= n_angular_;
  if (j < 0) j += n_angular_;
  return ring * n_angular_ + j;
}

SurfacePoint ConeMesh::node_point(std::int32_t id) const {
  if (id == apex_node()) return SurfacePoint::apex();
  return {radii_[id / n_angular_], (id % n_angular_) * step_};
}

std::size_t ConeMesh::edge_count() const {
  std::size_t directed = 0;
  for (double w : weights_) directed += std::isfinite(w) ? n_angular_ : 0;
  return directed / 2 + n_angular_;
}

std::vector<ConeMesh::Edge> ConeMesh::neighbors(std::int32_t id) const {
  std::vector<Edge> out;
  if (id == apex_node()) {
    for (int j = 0; j < n_angular_; ++j) out.push_back({node(0, j), radii_[0]});
    return out;
  }
  const int k = id / n_angular_;
  const int j = id % n_angular_;
  for (std::size_t s = 0; s < stencil_.size(); ++s) {
    const double w = weights_[k * stencil_.size() + s];
    if (!std::isfinite(w)) continue;
    out.push_back({node(k + stencil_[s].dk, j + stencil_[s].dj), w});
  }
  if (k == 0) out.push_back({apex_node(), radii_[0]});
  return out;
}

// Shortest path with two virtual endpoints, each joined to the grid nodes
// of its surrounding window.
struct MeshSearch {
  const ConeMesh& mesh;

  struct Attachment {
    std::vector<std::pair<std::int32_t, double>> links;
  };

  Attachment attach(const SurfacePoint& p) const {
    Attachment a;
    if (p.is_apex()) {
      a.links.push_back({mesh.apex_node(), 0.0});
      return a;
    }
    const double tol = kEpsilon * mesh.r_max();
    if (p.r() < mesh.r_min() - tol || p.r() > mesh.r_max() + tol) {
      throw Error(ErrorCode::OutOfMeshRange,
                  "r = " + std::to_string(p.r()) + " outside the mesh radii");
    }
    const int k0 = std::clamp(static_cast<int>(std::floor(std::log(p.r() / mesh.r_min()) / mesh.log_rho_)),
                              0, mesh.n_rings_ - 1);
    const int j0 = static_cast<int>(std::floor(p.phi() / mesh.step_));
    for (int k = std::max(0, k0 - 2); k <= std::min(mesh.n_rings_ - 1, k0 + 3); ++k) {
      for (int j = j0 - mesh.reach_; j <= j0 + 1 + mesh.reach_; ++j) {
        const double dtheta = std::abs(j * mesh.step_ - p.phi());
        a.links.push_back({mesh.node(k, j), ConeMesh::chord(p.r(), mesh.radii_[k], dtheta)});
      }
    }
    return a;
  }

  // A* towards q. The bound is the larger of the planar-projection distance
  // (forgetting the sheet is a local isometry) and the landmark triangle
  // bounds; both are consistent, so closed nodes are final.
  MeshRoute run(const SurfacePoint& p, const SurfacePoint& q) const {
    if (p.is_apex() && q.is_apex()) return {0.0, true};
    const Attachment src = attach(p);
    const Attachment dst = attach(q);
    const std::size_t n = mesh.node_count();
    const int m = mesh.n_angular_;
    const std::int32_t apex = mesh.apex_node();
    const auto& lm = mesh.landmarks();
    const std::size_t nl = lm.count;

    std::vector<double> dist(n, kInf);
    std::vector<std::int32_t> pred(n, -1);
    std::vector<std::uint8_t> closed(n, 0);
    // Arrival cost from a node straight to the target.
    std::vector<double> exit_cost(n, kInf);
    for (const auto& [id, w] : dst.links) exit_cost[id] = std::min(exit_cost[id], w);

    std::vector<double> to_q(nl, kInf);
    for (const auto& [id, w] : dst.links) {
      for (std::size_t i = 0; i < nl; ++i) to_q[i] = std::min(to_q[i], lm.dist[id * nl + i] + w);
    }

    const double qx = q.r() * std::cos(q.phi());
    const double qy = q.r() * std::sin(q.phi());
    auto bound = [&](std::int32_t id) {
      double h = q.r();
      if (id != apex) {
        const double r = mesh.radii_[id / m];
        const int j = id % m;
        const double dx = r * mesh.cos_[j] - qx;
        const double dy = r * mesh.sin_[j] - qy;
        h = std::sqrt(dx * dx + dy * dy);
      }
      const double* dl = &lm.dist[id * nl];
      for (std::size_t i = 0; i < nl; ++i) h = std::max(h, std::abs(to_q[i] - dl[i]));
      return h;
    };

    using Entry = std::pair<double, std::int32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (const auto& [id, w] : src.links) {
      if (w < dist[id]) {
        dist[id] = w;
        heap.push({w + bound(id), id});
      }
    }

    double best = kInf;
    std::int32_t best_via = -1;
    // Both endpoints inside one window: the straight chord is an edge too.
    if (!p.is_apex() && !q.is_apex()) {
      const double gap = angular_gap(p.phi(), q.phi()).delta_min;
      if (gap <= (mesh.reach_ + 1) * mesh.step_) {
        const bool near = std::any_of(src.links.begin(), src.links.end(), [&](const auto& link) {
          return std::isfinite(exit_cost[link.first]);
        });
        if (near) best = ConeMesh::chord(p.r(), q.r(), gap);
      }
    }

    const std::size_t ns = mesh.stencil_.size();
    while (!heap.empty()) {
      const auto [fu, u] = heap.top();
      heap.pop();
      if (closed[u]) continue;
      closed[u] = 1;
      const double du = dist[u];
      if (fu >= best) break;
      if (std::isfinite(exit_cost[u]) && du + exit_cost[u] < best) {
        best = du + exit_cost[u];
        best_via = u;
      }
      auto relax = [&](std::int32_t v, double w) {
        const double dv = du + w;
        if (dv < dist[v]) {
          dist[v] = dv;
          pred[v] = u;
          heap.push({dv + bound(v), v});
        }
      };
      if (u == apex) {
        for (int j = 0; j < m; ++j) relax(j, mesh.radii_[0]);
        continue;
      }
      const int k = u / m;
      const int j = u % m;
      const double* w = &mesh.weights_[k * ns];
      for (std::size_t s = 0; s < ns; ++s) {
        if (!std::isfinite(w[s])) continue;
        int j2 = j + mesh.stencil_[s].dj;
        if (j2 < 0) j2 += m;
        if (j2 >= m) j2 -= m;
        relax((k + mesh.stencil_[s].dk) * m + j2, w[s]);
      }
      if (k == 0) relax(apex, mesh.radii_[0]);
    }

    MeshRoute route{best, p.is_apex() || q.is_apex()};
    for (std::int32_t v = best_via; v >= 0; v = pred[v]) {
      if (v == apex) {
        route.visits_apex = true;
        break;
      }
    }
    return route;
  }

  // Plain Dijkstra over the whole grid from one node.
  std::vector<double> sweep(std::int32_t source) const {
    const std::size_t n = mesh.node_count();
    const int m = mesh.n_angular_;
    const std::int32_t apex = mesh.apex_node();
    const std::size_t ns = mesh.stencil_.size();
    std::vector<double> dist(n, kInf);
    using Entry = std::pair<double, std::int32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du > dist[u]) continue;
      auto relax = [&](std::int32_t v, double w) {
        if (du + w < dist[v]) {
          dist[v] = du + w;
          heap.push({dist[v], v});
        }
      };
      if (u == apex) {
        for (int j = 0; j < m; ++j) relax(j, mesh.radii_[0]);
        continue;
      }
      const int k = u / m;
      const int j = u % m;
      const double* w = &mesh.weights_[k * ns];
      for (std::size_t s = 0; s < ns; ++s) {
        if (!std::isfinite(w[s])) continue;
        int j2 = j + mesh.stencil_[s].dj;
        if (j2 < 0) j2 += m;
        if (j2 >= m) j2 -= m;
        relax((k + mesh.stencil_[s].dk) * m + j2, w[s]);
      }
      if (k == 0) relax(apex, mesh.radii_[0]);
    }
    return dist;
  }
};

const ConeMesh::Landmarks& ConeMesh::landmarks() const {
  std::call_once(landmarks_->once, [this] {
    Landmarks& lm = landmarks_->data;
    std::vector<std::int32_t> sources;
    for (int i = 0; i < kLandmarks; ++i) sources.push_back(node(n_rings_ - 1, i * n_angular_ / kLandmarks));
    lm.count = sources.size();
    lm.dist.assign(node_count() * lm.count, 0.0);
    const MeshSearch search{*this};
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const std::vector<double> d = search.sweep(sources[i]);
      for (std::size_t v = 0; v < d.size(); ++v) lm.dist[v * lm.count + i] = d[v];
    }
  });
  return landmarks_->data;
}

MeshRoute mesh_route(const ConeMesh& mesh, const SurfacePoint& p, const SurfacePoint& q) {
  return MeshSearch{mesh}.run(p, q);
}

double mesh_distance(const ConeMesh& mesh, const SurfacePoint& p, const SurfacePoint& q) {
  return mesh_route(mesh, p, q).length;
}

double path_length(std::span<const SurfacePoint> points) {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const SurfacePoint& a = points[i - 1];
    const SurfacePoint& b = points[i];
    if (a.is_apex() || b.is_apex()) {
      total += a.r() + b.r();
      continue;
    }
    const double gap = angular_gap(a.phi(), b.phi()).delta_min;
    if (gap > kPi) {
      throw Error(ErrorCode::NonLocalStep, "step " + std::to_string(i) + " spans more than pi");
    }
    total += ConeMesh::chord(a.r(), b.r(), gap);
  }
  return total;
}

}  // namespace logeuclid
