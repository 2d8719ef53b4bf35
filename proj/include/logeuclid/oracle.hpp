#pragma once

// Brute-force metric oracle: shortest paths on a polar mesh of the double cover.
//
// Every mesh edge joins two nodes whose angular offset is far below pi, so
// each edge is a genuine straight segment on the surface and its weight is
// the plain euclidean chord in the sector spanned by the two nodes. Graph
// paths are therefore real surface paths and the graph distance bounds the
// true distance from above. Nothing here consults the closed-form metric.

#include <logeuclid/surface.hpp>

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace logeuclid {

/// Relative node offset (rings, angular steps) of one stencil edge.
struct StencilOffset {
  int dk;
  int dj;
};

class ConeMesh {
 public:
  /// Geometric rings r_k = r_min * rho^k for k = 0..n_rings-1 ending at r_max,
  /// `n_angular` nodes per ring over [0, 4pi), plus the apex joined to the
  /// innermost ring. Throws InvalidResolution unless 0 < r_min < r_max,
  /// n_rings >= 16, n_angular >= 64 and n_angular % 8 == 0.
  ConeMesh(double r_min, double r_max, int n_rings, int n_angular);

  int rings() const { return n_rings_; }
  int angular() const { return n_angular_; }
  double r_min() const { return radii_.front(); }
  double r_max() const { return radii_.back(); }
  double ring_radius(int k) const { return radii_[k]; }
  double angular_step() const { return step_; }

  std::size_t node_count() const { return static_cast<std::size_t>(n_rings_) * n_angular_ + 1; }
  std::int32_t apex_node() const { return n_rings_ * n_angular_; }
  std::int32_t node(int ring, int j) const;
  SurfacePoint node_point(std::int32_t id) const;

  const std::vector<StencilOffset>& stencil() const { return stencil_; }
  /// Undirected edge count.
  std::size_t edge_count() const;

  struct Edge {
    std::int32_t to;
    double weight;
  };
  std::vector<Edge> neighbors(std::int32_t id) const;

  /// Chord between two positions whose angular offset is below pi.
  static double chord(double r1, double r2, double dtheta);

  /// Graph distances from a few outer-ring nodes, dist[node * count + i].
  /// Computed on first use.
  struct Landmarks {
    std::size_t count = 0;
    std::vector<double> dist;
  };
  const Landmarks& landmarks() const;

 private:
  friend struct MeshSearch;

  int n_rings_;
  int n_angular_;
  double step_;
  double log_rho_;
  std::vector<double> radii_;
  std::vector<double> cos_, sin_;
  int reach_;  ///< angular reach between adjacent rings
  std::vector<StencilOffset> stencil_;
  // weights_[k * stencil.size() + s]: edge from ring k along stencil entry s
  std::vector<double> weights_;

  struct LandmarkCache {
    std::once_flag once;
    Landmarks data;
  };
  std::shared_ptr<LandmarkCache> landmarks_;
};

/// Convenience wrapper with the argument order of the CLI.
ConeMesh build_mesh(double r_min, double r_max, int n_rings, int n_angular);

struct MeshRoute {
  double length = 0.0;
  bool visits_apex = false;
};

/// Shortest path after inserting p and q as temporary nodes joined to the
/// grid nodes of their surrounding stencil window. Throws OutOfMeshRange for
/// non-apex points outside [r_min, r_max].
MeshRoute mesh_route(const ConeMesh& mesh, const SurfacePoint& p, const SurfacePoint& q);
double mesh_distance(const ConeMesh& mesh, const SurfacePoint& p, const SurfacePoint& q);

/// Length of a polyline whose consecutive points are joined by straight
/// chords (gap at most pi) or meet the apex. Throws NonLocalStep otherwise.
double path_length(std::span<const SurfacePoint> points);

}  // namespace logeuclid
