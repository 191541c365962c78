#include "meshsum/disk.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "meshsum/error.hpp"

namespace meshsum {

namespace {

void require_degree(int r) {
  if (r < kMinDegree) throw DomainError("mesh degree must be at least 7, got " + std::to_string(r));
}

std::size_t slot_of(std::span<const VertexId> rot, VertexId x) {
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), x) - rot.begin());
}

CombinatorialDisk expand_single_vertex(const CombinatorialDisk& disk) {
  const int r = disk.degree();
  RotationGraph g = disk.graph();
  const VertexId center = 0;
  std::vector<VertexId> ring(r);
  for (int i = 0; i < r; ++i) ring[i] = static_cast<VertexId>(1 + i);
  for (int i = 0; i < r; ++i) {
    const VertexId next = ring[(i + 1) % r];
    const VertexId prev = ring[(i + r - 1) % r];
    g.add_vertex({next, center, prev});
  }
  g.mutable_rotation(center) = ring;
  return CombinatorialDisk(std::move(g), r, std::move(ring), disk.layer() + 1, disk.seed());
}

}  // namespace

const char* to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::Vertex:
      return "vertex";
    case SeedKind::Face:
      return "face";
    case SeedKind::Custom:
      return "custom";
  }
  return "custom";
}

CombinatorialDisk seed_face(int r) {
  require_degree(r);
  RotationGraph g({{1, 2}, {2, 0}, {0, 1}});
  return CombinatorialDisk(std::move(g), r, {0, 1, 2}, 0, SeedKind::Face);
}

CombinatorialDisk seed_vertex(int r) {
  require_degree(r);
  RotationGraph g(std::vector<std::vector<VertexId>>(1));
  return CombinatorialDisk(std::move(g), r, {}, 0, SeedKind::Vertex);
}

std::int64_t expanded_vertex_count(const CombinatorialDisk& disk) {
  const auto v = static_cast<std::int64_t>(disk.graph().vertex_count());
  if (disk.degenerate()) return v + disk.degree();
  std::int64_t added = 0;
  for (VertexId w : disk.boundary()) {
    added += disk.degree() - 2 - static_cast<std::int64_t>(disk.graph().degree(w)) + 1;
  }
  return v + added;
}

CombinatorialDisk expand(const CombinatorialDisk& disk, std::int64_t vertex_budget) {
  require_degree(disk.degree());
  const int r = disk.degree();
  const int bound = convexity_bound(r);
  const auto& boundary = disk.boundary();
  const std::size_t t = boundary.size();
  for (VertexId w : boundary) {
    if (static_cast<int>(disk.graph().degree(w)) > bound) {
      throw ConvexityError("boundary vertex " + std::to_string(w) + " has degree " +
                           std::to_string(disk.graph().degree(w)) + " > " + std::to_string(bound));
    }
  }
  const std::int64_t total = expanded_vertex_count(disk);
  if (total > vertex_budget) {
    throw BudgetError("expansion to layer " + std::to_string(disk.layer() + 1) + " needs " + std::to_string(total) +
                          " vertices, budget is " + std::to_string(vertex_budget),
                      total, vertex_budget);
  }
  if (disk.degenerate()) {
    if (disk.graph().vertex_count() != 1) throw MalformedDiskError("degenerate disk must be a single vertex");
    return expand_single_vertex(disk);
  }

  RotationGraph g = disk.graph();
  const auto first_new = static_cast<VertexId>(g.vertex_count());

  // New boundary, counterclockwise: for each w_j its private degree-3
  // vertices followed by the degree-4 vertex shared with w_{j+1}.
  std::vector<VertexId> cycle;
  cycle.reserve(static_cast<std::size_t>(total) - g.vertex_count());
  std::vector<std::size_t> first_private(t), shared(t);
  for (std::size_t j = 0; j < t; ++j) {
    const std::size_t k = r - 2 - disk.graph().degree(boundary[j]);
    first_private[j] = cycle.size();
    for (std::size_t i = 0; i < k; ++i) cycle.push_back(static_cast<VertexId>(first_new + cycle.size()));
    shared[j] = cycle.size();
    cycle.push_back(static_cast<VertexId>(first_new + cycle.size()));
  }
  const std::size_t n = cycle.size();
  auto next_on_cycle = [&](std::size_t i) { return cycle[(i + 1) % n]; };
  auto prev_on_cycle = [&](std::size_t i) { return cycle[(i + n - 1) % n]; };

  for (std::size_t j = 0; j < t; ++j) {
    const VertexId w = boundary[j];
    const VertexId w_next = boundary[(j + 1) % t];
    for (std::size_t i = first_private[j]; i < shared[j]; ++i) {
      g.add_vertex({next_on_cycle(i), w, prev_on_cycle(i)});
    }
    const std::size_t m = shared[j];
    g.add_vertex({next_on_cycle(m), w_next, w, prev_on_cycle(m)});
  }

  for (std::size_t j = 0; j < t; ++j) {
    const VertexId w = boundary[j];
    const VertexId w_prev = boundary[(j + t - 1) % t];
    const VertexId w_next = boundary[(j + 1) % t];
    auto& rot = g.mutable_rotation(w);
    const std::size_t at = slot_of(rot, w_prev);
    if (at == rot.size() || rot[(at + 1) % rot.size()] != w_next) {
      throw MalformedDiskError("rotation at boundary vertex " + std::to_string(w) +
                               " does not open to the exterior between its boundary neighbours");
    }
    std::vector<VertexId> fresh;
    fresh.reserve(r - rot.size());
    fresh.push_back(cycle[shared[(j + t - 1) % t]]);
    for (std::size_t i = first_private[j]; i < shared[j]; ++i) fresh.push_back(cycle[i]);
    fresh.push_back(cycle[shared[j]]);
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(at + 1), fresh.begin(), fresh.end());
  }

  return CombinatorialDisk(std::move(g), r, std::move(cycle), disk.layer() + 1, disk.seed());
}

BoundaryProfile boundary_profile(const CombinatorialDisk& disk) {
  if (disk.degenerate()) throw DomainError("boundary profile of the degenerate single-vertex seed");
  BoundaryProfile p;
  p.t = static_cast<std::int64_t>(disk.boundary().size());
  p.degrees.reserve(disk.boundary().size());
  for (VertexId w : disk.boundary()) {
    const int deg = static_cast<int>(disk.graph().degree(w));
    p.degrees.push_back(deg);
    p.d += deg;
  }
  return p;
}

bool is_convex(const CombinatorialDisk& disk) {
  const int bound = convexity_bound(disk.degree());
  return std::all_of(disk.boundary().begin(), disk.boundary().end(),
                     [&](VertexId w) { return static_cast<int>(disk.graph().degree(w)) <= bound; });
}

DiskCounts count_explicit(const CombinatorialDisk& disk) {
  const RotationGraph& g = disk.graph();
  const std::size_t sum = g.rotation_sum();
  if (sum % 2 != 0) throw MalformedDiskError("odd rotation sum " + std::to_string(sum));

  DiskCounts c;
  c.v = BigInt(static_cast<std::int64_t>(g.vertex_count()));
  c.e = BigInt(static_cast<std::int64_t>(sum / 2));
  c.s = c.v - BigInt(static_cast<std::int64_t>(disk.boundary().size()));
  if (disk.degenerate()) {
    if (sum != 0) throw MalformedDiskError("degenerate disk with edges");
    c.f = BigInt(0);
    return c;
  }

  const FaceTrace trace = trace_faces(g);
  const auto& boundary = disk.boundary();
  const VertexId w0 = boundary[0];
  const VertexId w1 = boundary[1];
  const std::size_t slot = slot_of(g.rotation(w1), w0);
  if (slot == g.degree(w1)) throw MalformedDiskError("boundary vertices " + std::to_string(w0) + ", " +
                                                     std::to_string(w1) + " are not adjacent");
  const std::uint32_t outer = trace.dart_face[trace.dart(w1, slot)];
  if (trace.face_length[outer] != boundary.size()) {
    throw MalformedDiskError("outer face has length " + std::to_string(trace.face_length[outer]) +
                             ", boundary has length " + std::to_string(boundary.size()));
  }
  for (std::size_t face = 0; face < trace.face_count(); ++face) {
    if (face != outer && trace.face_length[face] != 3) {
      throw MalformedDiskError("interior face " + std::to_string(face) + " has length " +
                               std::to_string(trace.face_length[face]));
    }
  }
  c.f = BigInt(static_cast<std::int64_t>(trace.face_count() - 1));
  return c;
}

LayerCensus layer_census(const CombinatorialDisk& /*prev*/, const CombinatorialDisk& next) {
  std::int64_t a = 0, b = 0;
  for (VertexId u : next.boundary()) {
    const std::size_t deg = next.graph().degree(u);
    if (deg == 3) {
      ++a;
    } else if (deg == 4) {
      ++b;
    } else {
      throw CensusContradiction("new boundary vertex " + std::to_string(u) + " has degree " + std::to_string(deg));
    }
  }
  return {BigInt(a), BigInt(b)};
}

DeltaCounts delta_counts(const CombinatorialDisk& prev, const CombinatorialDisk& next) {
  const DiskCounts before = count_explicit(prev);
  const DiskCounts after = count_explicit(next);
  return {after.v - before.v, after.e - before.e, after.f - before.f};
}

std::vector<Violation> validate_disk(const CombinatorialDisk& disk) {
  std::vector<Violation> out;
  const RotationGraph& g = disk.graph();
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const int r = disk.degree();

  if (r < kMinDegree) out.push_back({"ambient-degree", -1, -1, "r = " + std::to_string(r) + " < 7"});

  bool rotations_sound = true;
  for (std::int64_t u = 0; u < n; ++u) {
    std::vector<VertexId> sorted(g.rotation(static_cast<VertexId>(u)).begin(),
                                 g.rotation(static_cast<VertexId>(u)).end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        out.push_back({"duplicate-neighbour", u, sorted[i], "neighbour listed twice"});
        rotations_sound = false;
      }
    }
    for (VertexId w : g.rotation(static_cast<VertexId>(u))) {
      if (static_cast<std::int64_t>(w) >= n) {
        out.push_back({"rotation-range", u, w, "neighbour id out of range"});
        rotations_sound = false;
        continue;
      }
      if (static_cast<std::int64_t>(w) == u) {
        out.push_back({"loop", u, w, "vertex lists itself"});
        rotations_sound = false;
      }
      if (!g.adjacent(w, static_cast<VertexId>(u))) {
        out.push_back({"symmetry", u, w, "edge missing from the neighbour's rotation"});
        rotations_sound = false;
      }
    }
  }
  if (g.rotation_sum() % 2 != 0) out.push_back({"handshake", -1, -1, "rotation lengths sum to an odd number"});

  if (n == 0) {
    out.push_back({"empty", -1, -1, "graph has no vertices"});
    return out;
  }

  const auto& boundary = disk.boundary();
  if (disk.degenerate()) {
    if (n != 1 || g.rotation_sum() != 0)
      out.push_back({"degenerate-shape", -1, -1, "empty boundary requires a single isolated vertex"});
    return out;
  }

  bool boundary_sound = true;
  if (boundary.size() < 3) {
    out.push_back({"boundary-length", -1, -1, "boundary cycle shorter than 3"});
    boundary_sound = false;
  }
  std::vector<char> on_boundary(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < boundary.size(); ++j) {
    const VertexId w = boundary[j];
    if (static_cast<std::int64_t>(w) >= n) {
      out.push_back({"boundary-range", w, -1, "boundary id out of range"});
      boundary_sound = false;
      continue;
    }
    if (on_boundary[w]) {
      out.push_back({"boundary-simple", w, -1, "vertex repeated on boundary cycle"});
      boundary_sound = false;
    }
    on_boundary[w] = 1;
  }
  if (boundary_sound) {
    for (std::size_t j = 0; j < boundary.size(); ++j) {
      const VertexId w = boundary[j];
      const VertexId x = boundary[(j + 1) % boundary.size()];
      if (!g.adjacent(w, x)) {
        out.push_back({"boundary-edge", w, x, "consecutive boundary vertices not adjacent"});
        boundary_sound = false;
      }
    }
  }

  for (std::int64_t u = 0; u < n; ++u) {
    const auto deg = static_cast<int>(g.degree(static_cast<VertexId>(u)));
    if (on_boundary[static_cast<std::size_t>(u)]) {
      if (deg < 2 || deg > r)
        out.push_back({"boundary-degree", u, -1, "degree " + std::to_string(deg) + " outside [2, r]"});
    } else if (deg != r) {
      out.push_back({"interior-degree", u, -1, "degree " + std::to_string(deg) + " != r"});
    }
  }

  // Connectivity by BFS.
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::queue<VertexId> todo;
  todo.push(0);
  reached[0] = 1;
  std::int64_t reached_count = 1;
  while (!todo.empty()) {
    const VertexId u = todo.front();
    todo.pop();
    for (VertexId w : g.rotation(u)) {
      if (static_cast<std::int64_t>(w) < n && !reached[w]) {
        reached[w] = 1;
        ++reached_count;
        todo.push(w);
      }
    }
  }
  if (reached_count != n) out.push_back({"connected", -1, -1, "graph is disconnected"});

  if (!rotations_sound || !boundary_sound) return out;

  const FaceTrace trace = trace_faces(g);
  const VertexId w0 = boundary[0];
  const VertexId w1 = boundary[1];
  const std::uint32_t outer = trace.dart_face[trace.dart(w1, slot_of(g.rotation(w1), w0))];
  // The outer orbit must be exactly the boundary walked clockwise.
  for (std::size_t j = 0; j < boundary.size(); ++j) {
    const VertexId from = boundary[(j + 1) % boundary.size()];
    const VertexId to = boundary[j];
    if (trace.dart_face[trace.dart(from, slot_of(g.rotation(from), to))] != outer) {
      out.push_back({"outer-face", from, to, "boundary edge does not bound the outer face"});
      break;
    }
  }
  if (trace.face_length[outer] != boundary.size()) {
    out.push_back({"outer-face", -1, -1,
                   "outer face has length " + std::to_string(trace.face_length[outer]) + ", boundary has length " +
                       std::to_string(boundary.size())});
  }
  for (std::size_t face = 0; face < trace.face_count(); ++face) {
    if (face != outer && trace.face_length[face] != 3) {
      out.push_back({"triangular-faces", -1, -1,
                     "face " + std::to_string(face) + " has length " + std::to_string(trace.face_length[face])});
    }
  }
  const auto e = static_cast<std::int64_t>(g.edge_count());
  const auto faces = static_cast<std::int64_t>(trace.face_count());
  if (reached_count == n && n - e + faces != 2) {
    out.push_back({"planarity", -1, -1, "v - e + faces = " + std::to_string(n - e + faces) + ", expected 2"});
  }
  return out;
}

}  // namespace meshsum
