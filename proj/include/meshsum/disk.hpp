#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meshsum/counts.hpp"
#include "meshsum/rotation_graph.hpp"

namespace meshsum {

inline constexpr std::int64_t kDefaultVertexBudget = 1'000'000;
inline constexpr int kMinDegree = 7;

/// How a disk was obtained; vertex and face seeds carry layer provenance.
enum class SeedKind { Vertex, Face, Custom };

const char* to_string(SeedKind kind);

/// A combinatorial disk inside the degree-r triangular mesh: a rotation
/// system plus its counterclockwise boundary cycle. The single-vertex seed is
/// represented with an empty boundary and reported as degenerate.
class CombinatorialDisk {
 public:
  CombinatorialDisk(RotationGraph graph, int r, std::vector<VertexId> boundary, int layer = 0,
                    SeedKind seed = SeedKind::Custom)
      : graph_(std::move(graph)), r_(r), boundary_(std::move(boundary)), layer_(layer), seed_(seed) {}

  const RotationGraph& graph() const { return graph_; }
  int degree() const { return r_; }
  const std::vector<VertexId>& boundary() const { return boundary_; }
  int layer() const { return layer_; }
  SeedKind seed() const { return seed_; }
  bool degenerate() const { return boundary_.empty(); }

 private:
  RotationGraph graph_;
  int r_;
  std::vector<VertexId> boundary_;
  int layer_;
  SeedKind seed_;
};

struct BoundaryProfile {
  std::int64_t t = 0;
  std::int64_t d = 0;
  std::vector<int> degrees;  // in boundary order
};

/// Largest boundary degree allowed in a convex disk: floor(1 + r/2).
constexpr int convexity_bound(int r) { return 1 + r / 2; }

CombinatorialDisk seed_face(int r);
CombinatorialDisk seed_vertex(int r);

/// Returns T(disk). Throws ConvexityError for a non-convex input and
/// BudgetError if the result would have more than `vertex_budget` vertices.
CombinatorialDisk expand(const CombinatorialDisk& disk, std::int64_t vertex_budget = kDefaultVertexBudget);

/// Vertex count of expand(disk), computed from boundary degrees only.
std::int64_t expanded_vertex_count(const CombinatorialDisk& disk);

BoundaryProfile boundary_profile(const CombinatorialDisk& disk);
bool is_convex(const CombinatorialDisk& disk);

/// Counts by traversal: e from the handshake sum, f from face tracing.
DiskCounts count_explicit(const CombinatorialDisk& disk);

/// Degrees of next's boundary vertices; throws CensusContradiction if one
/// lies outside {3, 4}.
LayerCensus layer_census(const CombinatorialDisk& prev, const CombinatorialDisk& next);
DeltaCounts delta_counts(const CombinatorialDisk& prev, const CombinatorialDisk& next);

struct Violation {
  std::string invariant;
  std::int64_t vertex = -1;
  std::int64_t other = -1;
  std::string detail;
};

std::vector<Violation> validate_disk(const CombinatorialDisk& disk);

}  // namespace meshsum
