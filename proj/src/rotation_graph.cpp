#include "meshsum/rotation_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "meshsum/error.hpp"

namespace meshsum {

std::size_t RotationGraph::rotation_sum() const {
  std::size_t sum = 0;
  for (const auto& rot : rotations_) sum += rot.size();
  return sum;
}

bool RotationGraph::adjacent(VertexId u, VertexId w) const {
  const auto& rot = rotations_[u];
  return std::find(rot.begin(), rot.end(), w) != rot.end();
}

VertexId RotationGraph::add_vertex(std::vector<VertexId> rotation) {
  rotations_.push_back(std::move(rotation));
  return static_cast<VertexId>(rotations_.size() - 1);
}

FaceTrace trace_faces(const RotationGraph& graph) {
  const std::size_t n = graph.vertex_count();
  FaceTrace trace;
  trace.dart_offset.resize(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) trace.dart_offset[u + 1] = trace.dart_offset[u] + graph.degree(u);
  const std::size_t darts = trace.dart_offset[n];

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  trace.dart_face.assign(darts, kUnset);

  for (std::size_t u0 = 0; u0 < n; ++u0) {
    for (std::size_t slot0 = 0; slot0 < graph.degree(u0); ++slot0) {
      if (trace.dart_face[trace.dart_offset[u0] + slot0] != kUnset) continue;
      const auto face = static_cast<std::uint32_t>(trace.face_length.size());
      std::size_t length = 0;
      auto u = static_cast<VertexId>(u0);
      std::size_t slot = slot0;
      while (trace.dart_face[trace.dart_offset[u] + slot] == kUnset) {
        trace.dart_face[trace.dart_offset[u] + slot] = face;
        ++length;
        const VertexId w = graph.rotation(u)[slot];
        if (w >= n) throw MalformedDiskError("neighbour id out of range at vertex " + std::to_string(u));
        const auto rot_w = graph.rotation(w);
        const auto it = std::find(rot_w.begin(), rot_w.end(), u);
        if (it == rot_w.end()) {
          throw MalformedDiskError("asymmetric rotation: " + std::to_string(u) + " lists " + std::to_string(w) +
                                   " but not conversely");
        }
        const auto pos = static_cast<std::size_t>(it - rot_w.begin());
        slot = (pos + rot_w.size() - 1) % rot_w.size();
        u = w;
      }
      if (u != u0 || slot != slot0) {
        // Only possible when the next-dart map is not a permutation.
        throw MalformedDiskError("face tracing did not close at vertex " + std::to_string(u0));
      }
      trace.face_length.push_back(length);
    }
  }
  return trace;
}

}  // namespace meshsum
