#include "meshsum/render_svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <queue>
#include <string>

#include "meshsum/error.hpp"

namespace meshsum {

namespace {

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

DiskLayout layout_disk(const CombinatorialDisk& disk) {
  const RotationGraph& g = disk.graph();
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> seeds;
  int ring_offset = 0;
  switch (disk.seed()) {
    case SeedKind::Vertex:
      seeds = {0};
      break;
    case SeedKind::Face:
      if (n < 3) throw LayoutError("face-seeded disk with fewer than 3 vertices");
      seeds = {0, 1, 2};
      ring_offset = 1;
      break;
    case SeedKind::Custom:
      throw LayoutError("disk has no layer provenance (not grown from a vertex or face seed)");
  }
  if (n == 0) throw LayoutError("empty disk");

  // BFS distance from the seed equals the expansion that created a vertex.
  DiskLayout layout;
  layout.ring.assign(n, -1);
  std::queue<VertexId> todo;
  for (VertexId s : seeds) {
    layout.ring[s] = ring_offset;
    todo.push(s);
  }
  while (!todo.empty()) {
    const VertexId u = todo.front();
    todo.pop();
    for (VertexId w : g.rotation(u)) {
      if (w >= n) throw LayoutError("neighbour id out of range");
      if (layout.ring[w] < 0) {
        layout.ring[w] = layout.ring[u] + 1;
        todo.push(w);
      }
    }
  }
  int max_ring = 0;
  for (int k : layout.ring) {
    if (k < 0) throw LayoutError("disk is disconnected");
    max_ring = std::max(max_ring, k);
  }
  if (max_ring - ring_offset != disk.layer()) {
    throw LayoutError("ring structure disagrees with layer index " + std::to_string(disk.layer()));
  }
  layout.ring_count = max_ring + 1;

  std::vector<std::size_t> ring_size(static_cast<std::size_t>(layout.ring_count), 0);
  for (int k : layout.ring) ++ring_size[static_cast<std::size_t>(k)];

  const double spacing = kCanvasSize / (2.0 * max_ring + 2.0);
  const double centre = kCanvasSize / 2.0;
  std::vector<std::size_t> placed(ring_size.size(), 0);
  layout.position.resize(n);
  // Ids are dense in creation order, so ascending id is boundary order.
  for (std::size_t v = 0; v < n; ++v) {
    const auto k = static_cast<std::size_t>(layout.ring[v]);
    const double radius = spacing * static_cast<double>(k);
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(placed[k]++) / static_cast<double>(ring_size[k]);
    layout.position[v] = {centre + radius * std::cos(angle), centre - radius * std::sin(angle)};
  }
  return layout;
}

std::string emit_svg(const CombinatorialDisk& disk, const DiskLayout& layout) {
  const RotationGraph& g = disk.graph();
  const std::size_t n = g.vertex_count();
  std::string out;
  out.reserve(128 + n * 120);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  const double stroke = std::max(0.05, std::min(1.0, 40.0 / std::sqrt(static_cast<double>(n) + 1.0)));
  const double dot = std::max(0.15, std::min(6.0, 3.0 * stroke));
  out += "<g stroke=\"#335\" stroke-width=\"" + fixed(stroke) + "\">\n";
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.rotation(u)) {
      if (w <= u) continue;
      const Point2 a = layout.position[u];
      const Point2 b = layout.position[w];
      out += "<line x1=\"" + fixed(a.x) + "\" y1=\"" + fixed(a.y) + "\" x2=\"" + fixed(b.x) + "\" y2=\"" + fixed(b.y) +
             "\"/>\n";
    }
  }
  out += "</g>\n";
  out += "<g fill=\"#c33\">\n";
  for (VertexId v = 0; v < n; ++v) {
    const Point2 p = layout.position[v];
    out += "<circle cx=\"" + fixed(p.x) + "\" cy=\"" + fixed(p.y) + "\" r=\"" + fixed(dot) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace meshsum
