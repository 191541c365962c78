#pragma once

#include <cstdint>
#include <vector>

#include "meshsum/counts.hpp"
#include "meshsum/disk.hpp"

namespace meshsum {

inline constexpr int kMaxLayers = 10'000;

/// Sufficient statistics of a convex seed disk: mesh degree, boundary length
/// and boundary degree sum.
struct SeedDescriptor {
  int r = 7;
  std::int64_t t = 3;
  std::int64_t d = 6;
  friend bool operator==(const SeedDescriptor&, const SeedDescriptor&) = default;
};

inline SeedDescriptor face_profile(int r) { return {r, 3, 6}; }
inline SeedDescriptor fan_profile(int r) { return {r, r, 3 * static_cast<std::int64_t>(r)}; }

/// Checks the necessary conditions (degree bounds, divisibility by r - 6,
/// nonnegative counts). Throws InvalidSeed naming the failing component:
/// "r", "t", "d", "v", "e", "f" or "s".
void validate_seed(const SeedDescriptor& seed);

/// Solves v - e + f = 1, t + s = v, rs + d = 2e, 3f + t = 2e for (v, e, f, s).
DiskCounts counts_from_boundary(const SeedDescriptor& seed);

/// (a_1, b_1) = (t(r - 2) - d, t).
LayerCensus initial_census(const SeedDescriptor& seed);

/// (a, b) -> ((r - 5)a + (r - 6)b, a + b).
LayerCensus census_step(int r, const LayerCensus& c);

/// (a, b) -> (a + b, 2a + 3b, a + 2b).
DeltaCounts deltas_from_census(const LayerCensus& c);

/// x_{n+2} = (r - 4) x_{n+1} - x_n.
BigInt second_order_step(int r, const BigInt& x_n, const BigInt& x_np1);

struct LayerPrediction {
  int n = 0;
  LayerCensus census;
  DeltaCounts deltas;
  DiskCounts cumulative;
};

/// Layers 1..n_max grown from a valid seed. The coupled census recurrence is
/// primary; from layer 3 on every delta is re-derived with the second-order
/// recurrence and a disagreement raises RecurrenceMismatch.
std::vector<LayerPrediction> predict_layers(const SeedDescriptor& seed, int n_max);

/// Same pipeline from an explicit starting point. Used for the single-vertex
/// seed, whose first expansion is the fan with census (a, b) = (r, 0).
std::vector<LayerPrediction> predict_layers_from(int r, const DiskCounts& initial, const LayerCensus& first,
                                                 int n_max);

/// Counts of the seed disk for a vertex or face seed (layer 0).
DiskCounts seed_counts(SeedKind kind, int r);

/// Layer predictions for a vertex or face seed.
std::vector<LayerPrediction> predict_seed(SeedKind kind, int r, int n_max);

struct PlatonicCounts {
  int v, e, f;
  friend bool operator==(const PlatonicCounts&, const PlatonicCounts&) = default;
};

/// Closed triangulated spheres with every vertex of degree r in {3, 4, 5}.
PlatonicCounts platonic_counts(int r);

}  // namespace meshsum
