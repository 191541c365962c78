#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "meshsum/disk.hpp"
#include "meshsum/disk_json.hpp"
#include "meshsum/error.hpp"
#include "meshsum/growth.hpp"

namespace meshsum {

// Readable test names in ctest.
void PrintTo(SeedKind kind, std::ostream* os) { *os << to_string(kind); }

namespace {

DiskCounts counts(std::int64_t v, std::int64_t e, std::int64_t f, std::int64_t s) {
  return {BigInt(v), BigInt(e), BigInt(f), BigInt(s)};
}

CombinatorialDisk grow(CombinatorialDisk disk, int times, std::int64_t budget = kDefaultVertexBudget) {
  for (int i = 0; i < times; ++i) disk = expand(disk, budget);
  return disk;
}

/// k triangles around a boundary vertex c = 0; rim x_0..x_k = 1..k+1.
/// The boundary c, x_0, ..., x_k is counterclockwise and c has degree k+1.
CombinatorialDisk fan_strip(int r, int k) {
  std::vector<std::vector<VertexId>> rot(static_cast<std::size_t>(k + 2));
  const VertexId c = 0;
  for (int i = 0; i <= k; ++i) rot[0].push_back(static_cast<VertexId>(1 + i));
  for (int i = 0; i <= k; ++i) {
    const VertexId x = static_cast<VertexId>(1 + i);
    if (i == 0) {
      rot[x] = {static_cast<VertexId>(x + 1), c};
    } else if (i == k) {
      rot[x] = {c, static_cast<VertexId>(x - 1)};
    } else {
      rot[x] = {static_cast<VertexId>(x + 1), c, static_cast<VertexId>(x - 1)};
    }
  }
  std::vector<VertexId> boundary{c};
  for (int i = 0; i <= k; ++i) boundary.push_back(static_cast<VertexId>(1 + i));
  return CombinatorialDisk(RotationGraph(std::move(rot)), r, std::move(boundary));
}

bool has_violation(const std::vector<Violation>& vs, const std::string& name) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.invariant == name; });
}

TEST(Seeds, Face) {
  const auto disk = seed_face(7);
  EXPECT_EQ(count_explicit(disk), counts(3, 3, 1, 0));
  const auto p = boundary_profile(disk);
  EXPECT_EQ(p.t, 3);
  EXPECT_EQ(p.d, 6);
  EXPECT_TRUE(is_convex(disk));
  EXPECT_TRUE(validate_disk(disk).empty());
}

TEST(Seeds, Vertex) {
  const auto disk = seed_vertex(7);
  EXPECT_TRUE(disk.degenerate());
  EXPECT_EQ(count_explicit(disk), counts(1, 0, 0, 1));
  EXPECT_THROW(boundary_profile(disk), DomainError);
  EXPECT_TRUE(validate_disk(disk).empty());
}

TEST(Seeds, RejectSmallDegree) {
  EXPECT_THROW(seed_face(6), DomainError);
  EXPECT_THROW(seed_vertex(3), DomainError);
}

TEST(Expand, FanAroundVertex) {
  const auto fan7 = expand(seed_vertex(7));
  EXPECT_EQ(count_explicit(fan7), counts(8, 14, 7, 1));
  const auto p = boundary_profile(fan7);
  EXPECT_EQ(p.t, 7);
  EXPECT_EQ(p.d, 21);
  EXPECT_TRUE(std::all_of(p.degrees.begin(), p.degrees.end(), [](int d) { return d == 3; }));
  EXPECT_EQ(fan7.layer(), 1);

  const auto fan8 = expand(seed_vertex(8));
  EXPECT_EQ(count_explicit(fan8), counts(9, 16, 8, 1));
}

TEST(Expand, FaceSeedFirstLayer) {
  const auto seed = seed_face(7);
  const auto next = expand(seed);
  EXPECT_EQ(count_explicit(next).v, BigInt(15));
  const auto p = boundary_profile(next);
  EXPECT_EQ(p.t, 12);
  EXPECT_EQ(p.d, 9 * 3 + 3 * 4);
  EXPECT_EQ(layer_census(seed, next), (LayerCensus{BigInt(9), BigInt(3)}));
  EXPECT_EQ(delta_counts(seed, next), (DeltaCounts{BigInt(12), BigInt(27), BigInt(15)}));
  // The seed is untouched.
  EXPECT_EQ(count_explicit(seed), counts(3, 3, 1, 0));
}

TEST(Expand, SecondLayers) {
  const auto fan = expand(seed_vertex(7));
  const auto t2 = expand(fan);
  const auto c = count_explicit(t2);
  EXPECT_EQ(c.v, BigInt(29));
  EXPECT_EQ(c.e, BigInt(63));
  EXPECT_EQ(c.f, BigInt(35));
  EXPECT_EQ(layer_census(fan, t2), (LayerCensus{BigInt(14), BigInt(7)}));
  EXPECT_EQ(delta_counts(fan, t2), (DeltaCounts{BigInt(21), BigInt(49), BigInt(28)}));

  const auto face2 = grow(seed_face(7), 2);
  EXPECT_EQ(count_explicit(face2), counts(48, 108, 61, 48 - 33));
}

TEST(Expand, RejectsNonConvexAndBudget) {
  const auto strip = fan_strip(7, 4);
  EXPECT_TRUE(validate_disk(strip).empty());
  EXPECT_FALSE(is_convex(strip));
  EXPECT_THROW(expand(strip), ConvexityError);

  EXPECT_EQ(expanded_vertex_count(seed_face(7)), 15);
  EXPECT_THROW(expand(seed_face(7), 14), BudgetError);
  EXPECT_NO_THROW(expand(seed_face(7), 15));
  try {
    expand(seed_vertex(9), 5);
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.requested(), 10);
    EXPECT_EQ(e.budget(), 5);
  }
}

TEST(Convexity, OddDegreeUsesFloor) {
  EXPECT_EQ(convexity_bound(7), 4);
  EXPECT_EQ(convexity_bound(8), 5);
  EXPECT_EQ(convexity_bound(9), 5);
  EXPECT_TRUE(is_convex(fan_strip(7, 3)));   // degree 4
  EXPECT_FALSE(is_convex(fan_strip(7, 4)));  // degree 5
  EXPECT_TRUE(is_convex(fan_strip(8, 4)));   // 5 <= 5
  EXPECT_TRUE(is_convex(fan_strip(9, 4)));   // 5 <= floor(5.5)
  EXPECT_FALSE(is_convex(fan_strip(9, 5)));
}

TEST(CountExplicit, HandBuiltStrip) {
  EXPECT_EQ(count_explicit(fan_strip(7, 4)), counts(6, 9, 4, 0));
}

TEST(CountExplicit, RejectsNonTriangularInterior) {
  // A quadrilateral with its boundary: two faces of length 4.
  RotationGraph square({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
  const CombinatorialDisk disk(std::move(square), 7, {0, 1, 2, 3});
  EXPECT_THROW(count_explicit(disk), MalformedDiskError);
  EXPECT_TRUE(has_violation(validate_disk(disk), "triangular-faces"));
}

TEST(Validate, AsymmetricAdjacency) {
  RotationGraph g({{2}, {2, 0}, {0, 1}});
  const CombinatorialDisk disk(std::move(g), 7, {0, 1, 2});
  const auto vs = validate_disk(disk);
  ASSERT_TRUE(has_violation(vs, "symmetry"));
  const auto it = std::find_if(vs.begin(), vs.end(), [](const Violation& v) { return v.invariant == "symmetry"; });
  EXPECT_EQ(it->vertex, 1);
  EXPECT_EQ(it->other, 0);
}

TEST(Validate, InteriorDegreeTooSmall) {
  // Fan of 8 triangles claimed to live in the degree-9 mesh.
  const auto fan8 = expand(seed_vertex(8));
  const CombinatorialDisk disk(fan8.graph(), 9, fan8.boundary());
  const auto vs = validate_disk(disk);
  ASSERT_TRUE(has_violation(vs, "interior-degree"));
  EXPECT_EQ(vs.front().vertex, 0);
}

TEST(Validate, LoopsDuplicatesAndBoundaryDefects) {
  RotationGraph loop({{0, 1, 2}, {2, 0}, {0, 1}});
  EXPECT_TRUE(has_violation(validate_disk(CombinatorialDisk(std::move(loop), 7, {0, 1, 2})), "loop"));

  RotationGraph dup({{1, 1, 2}, {2, 0}, {0, 1}});
  EXPECT_TRUE(has_violation(validate_disk(CombinatorialDisk(std::move(dup), 7, {0, 1, 2})), "duplicate-neighbour"));

  const auto face = seed_face(7);
  EXPECT_TRUE(has_violation(validate_disk(CombinatorialDisk(face.graph(), 7, {0, 1, 1})), "boundary-simple"));
  EXPECT_TRUE(has_violation(validate_disk(CombinatorialDisk(face.graph(), 7, {0, 1})), "boundary-length"));
  // Clockwise boundary: the traced outer face is on the wrong side.
  const auto fan = expand(seed_vertex(7));
  std::vector<VertexId> reversed(fan.boundary().rbegin(), fan.boundary().rend());
  EXPECT_TRUE(has_violation(validate_disk(CombinatorialDisk(fan.graph(), 7, reversed)), "outer-face"));
  EXPECT_TRUE(has_violation(validate_disk(CombinatorialDisk(face.graph(), 5, {0, 1, 2})), "ambient-degree"));
}

TEST(DiskJson, RoundTripPreservesEverything) {
  const auto disk = grow(seed_face(8), 2);
  const auto doc = disk_to_json(disk);
  EXPECT_EQ(doc["r"], 8);
  EXPECT_EQ(doc["layer"], 2);
  EXPECT_EQ(doc["seed"], "face");
  const auto back = disk_from_json(doc);
  EXPECT_EQ(back.graph().rotations(), disk.graph().rotations());
  EXPECT_EQ(back.boundary(), disk.boundary());
  EXPECT_EQ(back.seed(), SeedKind::Face);
  EXPECT_EQ(disk_to_json(back).dump(), doc.dump());
}

TEST(DiskJson, RejectsMalformedDocuments) {
  EXPECT_THROW(disk_from_json(nlohmann::json::array()), MalformedDiskError);
  EXPECT_THROW(disk_from_json({{"r", 7}, {"boundary", {0}}}), MalformedDiskError);
  EXPECT_THROW(disk_from_json({{"r", "x"}, {"boundary", {0}}, {"rotation", {{1}}}}), MalformedDiskError);
  EXPECT_THROW(disk_from_json({{"r", 7}, {"boundary", {-1}}, {"rotation", {{1}}}}), MalformedDiskError);
}

/// Sweep over degrees and seeds: structural invariants of every layer.
class GrowthSweep : public ::testing::TestWithParam<std::tuple<int, SeedKind>> {};

TEST_P(GrowthSweep, LayerInvariants) {
  const auto [r, kind] = GetParam();
  constexpr std::int64_t kBudget = 30'000;
  CombinatorialDisk disk = kind == SeedKind::Vertex ? seed_vertex(r) : seed_face(r);
  int layers = 0;
  while (expanded_vertex_count(disk) <= kBudget) {
    const CombinatorialDisk next = expand(disk, kBudget);
    ASSERT_TRUE(validate_disk(next).empty()) << "r=" << r << " layer " << next.layer();
    const DiskCounts c = count_explicit(next);
    const auto t = static_cast<std::int64_t>(next.boundary().size());
    EXPECT_EQ(c.v - c.e + c.f, BigInt(1));
    EXPECT_EQ(BigInt(static_cast<std::int64_t>(next.graph().rotation_sum())), BigInt(2) * c.e);
    EXPECT_EQ(BigInt(3) * c.f + BigInt(t), BigInt(2) * c.e);
    EXPECT_TRUE(is_convex(next));

    const LayerCensus census = layer_census(disk, next);
    if (!disk.degenerate()) {
      const auto p = boundary_profile(disk);
      EXPECT_EQ(census, (LayerCensus{BigInt(p.t * (r - 2) - p.d), BigInt(p.t)}));
    }
    const DeltaCounts delta = delta_counts(disk, next);
    EXPECT_EQ(delta, deltas_from_census(census));
    EXPECT_EQ(delta.v - delta.e + delta.f, BigInt(0));

    // The new boundary consists of exactly the new vertices, each once.
    std::set<VertexId> fresh(next.boundary().begin(), next.boundary().end());
    EXPECT_EQ(fresh.size(), next.boundary().size());
    EXPECT_EQ(*fresh.begin(), static_cast<VertexId>(disk.graph().vertex_count()));
    EXPECT_EQ(*fresh.rbegin(), static_cast<VertexId>(next.graph().vertex_count() - 1));

    const auto p_next = boundary_profile(next);
    EXPECT_EQ(counts_from_boundary({r, p_next.t, p_next.d}), c);
    disk = next;
    ++layers;
  }
  EXPECT_GE(layers, 2);
}

/// T(G) is the closed neighbourhood of G: checked inside T^2(G), where every
/// vertex of T(G) already has its full mesh neighbourhood.
TEST_P(GrowthSweep, ExpansionIsClosedNeighbourhood) {
  const auto [r, kind] = GetParam();
  CombinatorialDisk g = kind == SeedKind::Vertex ? expand(seed_vertex(r)) : seed_face(r);
  const auto h = expand(g);
  const auto h2 = expand(h);
  std::set<VertexId> closure;
  for (VertexId u = 0; u < g.graph().vertex_count(); ++u) {
    closure.insert(u);
    for (VertexId w : h2.graph().rotation(u)) closure.insert(w);
  }
  EXPECT_EQ(closure.size(), h.graph().vertex_count());
  EXPECT_EQ(*closure.rbegin(), static_cast<VertexId>(h.graph().vertex_count() - 1));
  // Induced edges of the closure in T^2(G) are exactly the edges of T(G).
  std::size_t induced = 0;
  for (VertexId u : closure) {
    for (VertexId w : h2.graph().rotation(u)) induced += closure.count(w);
  }
  EXPECT_EQ(induced / 2, h.graph().edge_count());
}

INSTANTIATE_TEST_SUITE_P(Degrees, GrowthSweep,
                         ::testing::Combine(::testing::Range(7, 13),
                                            ::testing::Values(SeedKind::Vertex, SeedKind::Face)),
                         [](const auto& info) {
                           return "r" + std::to_string(std::get<0>(info.param)) + "_" +
                                  meshsum::to_string(std::get<1>(info.param));
                         });

}  // namespace
}  // namespace meshsum
