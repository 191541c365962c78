#pragma once

#include "meshsum/bigint.hpp"

namespace meshsum {

/// Vertices, edges, interior faces and interior vertices of a disk.
struct DiskCounts {
  BigInt v, e, f, s;
  friend bool operator==(const DiskCounts&, const DiskCounts&) = default;
};

/// Degree-3 (a) and degree-4 (b) vertices on the boundary created by one expansion.
struct LayerCensus {
  BigInt a, b;
  friend bool operator==(const LayerCensus&, const LayerCensus&) = default;
};

/// Vertices, edges and faces added by one expansion.
struct DeltaCounts {
  BigInt v, e, f;
  friend bool operator==(const DeltaCounts&, const DeltaCounts&) = default;
};

}  // namespace meshsum
