#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace meshsum {

using VertexId = std::uint32_t;

/// Finite plane graph stored as a rotation system: for every vertex the
/// counterclockwise cyclic order of its neighbours.
///
/// The constructor does not check anything; use validate_disk() (disk.hpp)
/// for the symmetry / simplicity invariants.
class RotationGraph {
 public:
  RotationGraph() = default;
  explicit RotationGraph(std::vector<std::vector<VertexId>> rotations)
      : rotations_(std::move(rotations)) {}

  std::size_t vertex_count() const { return rotations_.size(); }
  std::size_t degree(VertexId v) const { return rotations_[v].size(); }
  std::span<const VertexId> rotation(VertexId v) const { return rotations_[v]; }
  const std::vector<std::vector<VertexId>>& rotations() const { return rotations_; }

  /// Sum of rotation lengths (2e for a symmetric system).
  std::size_t rotation_sum() const;
  std::size_t edge_count() const { return rotation_sum() / 2; }

  bool adjacent(VertexId u, VertexId w) const;

  VertexId add_vertex(std::vector<VertexId> rotation = {});
  std::vector<VertexId>& mutable_rotation(VertexId v) { return rotations_[v]; }

 private:
  std::vector<std::vector<VertexId>> rotations_;
};

/// Orbits of the face permutation. A dart u->w is followed by w->x where x
/// precedes u in the counterclockwise rotation of w, so each orbit walks the
/// face lying to the left of its darts.
struct FaceTrace {
  std::vector<std::size_t> dart_offset;  // first dart of each vertex; size v+1
  std::vector<std::uint32_t> dart_face;  // face id per dart
  std::vector<std::size_t> face_length;  // darts per face

  std::size_t face_count() const { return face_length.size(); }
  std::size_t dart(VertexId u, std::size_t slot) const { return dart_offset[u] + slot; }
};

/// Throws MalformedDiskError if the rotation system is not symmetric.
FaceTrace trace_faces(const RotationGraph& graph);

}  // namespace meshsum
