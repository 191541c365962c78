#pragma once

#include <string>
#include <vector>

#include "meshsum/disk.hpp"

namespace meshsum {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Concentric layout: ring k holds the vertices added by expansion k
/// (face seeds start on ring 1), evenly spaced in creation order.
struct DiskLayout {
  std::vector<Point2> position;
  std::vector<int> ring;
  int ring_count = 0;  // largest ring index + 1
};

inline constexpr double kCanvasSize = 1000.0;

/// Throws LayoutError if the disk has no vertex/face seed provenance.
DiskLayout layout_disk(const CombinatorialDisk& disk);

/// Standalone SVG 1.1: one <line> per edge, then one <circle> per vertex.
/// Output depends only on the inputs.
std::string emit_svg(const CombinatorialDisk& disk, const DiskLayout& layout);

}  // namespace meshsum
