#include "meshsum/growth.hpp"

#include <string>

#include "meshsum/error.hpp"

namespace meshsum {

namespace {

BigInt exact_quotient(const BigInt& numerator, const BigInt& divisor, const char* component) {
  BigInt q;
  if (!BigInt::divide_exact(numerator, divisor, q)) {
    throw InvalidSeed(component, numerator.to_string() + " is not divisible by r - 6 = " + divisor.to_string());
  }
  if (q.sign() < 0) throw InvalidSeed(component, "negative count " + q.to_string());
  return q;
}

void require_layers(int n_max) {
  if (n_max < 1 || n_max > kMaxLayers) {
    throw DomainError("layer count must be in [1, " + std::to_string(kMaxLayers) + "], got " + std::to_string(n_max));
  }
}

}  // namespace

void validate_seed(const SeedDescriptor& seed) {
  if (seed.r < kMinDegree) throw InvalidSeed("r", "mesh degree " + std::to_string(seed.r) + " < 7");
  if (seed.t < 3) throw InvalidSeed("t", "boundary length " + std::to_string(seed.t) + " < 3");
  const BigInt t(seed.t), d(seed.d);
  if (d < BigInt(2) * t || d > t * BigInt(convexity_bound(seed.r))) {
    throw InvalidSeed("d", "degree sum " + std::to_string(seed.d) + " outside [2t, t*floor(1 + r/2)]");
  }
  (void)counts_from_boundary(seed);
}

DiskCounts counts_from_boundary(const SeedDescriptor& seed) {
  if (seed.r < kMinDegree) throw InvalidSeed("r", "mesh degree " + std::to_string(seed.r) + " < 7");
  const BigInt r(seed.r), t(seed.t), d(seed.d);
  const BigInt k = r - BigInt(6);
  DiskCounts c;
  c.v = exact_quotient(t * r - BigInt(2) * t - d - BigInt(6), k, "v");
  c.e = exact_quotient(BigInt(2) * t * r - BigInt(3) * d - BigInt(3) * r, k, "e");
  c.f = exact_quotient(t * r + BigInt(2) * t - BigInt(2) * d - BigInt(2) * r, k, "f");
  c.s = exact_quotient(BigInt(4) * t - d - BigInt(6), k, "s");
  return c;
}

LayerCensus initial_census(const SeedDescriptor& seed) {
  validate_seed(seed);
  LayerCensus c{BigInt(seed.t) * BigInt(seed.r - 2) - BigInt(seed.d), BigInt(seed.t)};
  if (c.a.sign() < 0) throw InvalidSeed("a", "a_1 = " + c.a.to_string() + " < 0");
  return c;
}

LayerCensus census_step(int r, const LayerCensus& c) {
  return {BigInt(r - 5) * c.a + BigInt(r - 6) * c.b, c.a + c.b};
}

DeltaCounts deltas_from_census(const LayerCensus& c) {
  return {c.a + c.b, BigInt(2) * c.a + BigInt(3) * c.b, c.a + BigInt(2) * c.b};
}

BigInt second_order_step(int r, const BigInt& x_n, const BigInt& x_np1) { return BigInt(r - 4) * x_np1 - x_n; }

std::vector<LayerPrediction> predict_layers_from(int r, const DiskCounts& initial, const LayerCensus& first,
                                                 int n_max) {
  require_layers(n_max);
  std::vector<LayerPrediction> out;
  out.reserve(static_cast<std::size_t>(n_max));
  LayerCensus census = first;
  DiskCounts cum = initial;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) census = census_step(r, census);
    LayerPrediction p;
    p.n = n;
    p.census = census;
    p.deltas = deltas_from_census(census);
    if (n >= 3) {
      const auto& d1 = out[n - 3].deltas;
      const auto& d2 = out[n - 2].deltas;
      const DeltaCounts check{second_order_step(r, d1.v, d2.v), second_order_step(r, d1.e, d2.e),
                              second_order_step(r, d1.f, d2.f)};
      if (!(check == p.deltas)) {
        throw RecurrenceMismatch("coupled and second-order recurrences disagree at layer " + std::to_string(n));
      }
    }
    cum.v += p.deltas.v;
    cum.e += p.deltas.e;
    cum.f += p.deltas.f;
    cum.s = cum.v - (census.a + census.b);
    p.cumulative = cum;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<LayerPrediction> predict_layers(const SeedDescriptor& seed, int n_max) {
  require_layers(n_max);
  const LayerCensus first = initial_census(seed);
  return predict_layers_from(seed.r, counts_from_boundary(seed), first, n_max);
}

DiskCounts seed_counts(SeedKind kind, int r) {
  switch (kind) {
    case SeedKind::Face:
      return counts_from_boundary(face_profile(r));
    case SeedKind::Vertex:
      if (r < kMinDegree) throw DomainError("mesh degree must be at least 7, got " + std::to_string(r));
      return {BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    case SeedKind::Custom:
      break;
  }
  throw DomainError("custom seeds have no built-in profile");
}

std::vector<LayerPrediction> predict_seed(SeedKind kind, int r, int n_max) {
  if (kind == SeedKind::Face) return predict_layers(face_profile(r), n_max);
  const DiskCounts initial = seed_counts(kind, r);
  return predict_layers_from(r, initial, LayerCensus{BigInt(r), BigInt(0)}, n_max);
}

PlatonicCounts platonic_counts(int r) {
  if (r < 3 || r > 5) throw DomainError("platonic triangulations exist only for r in {3, 4, 5}, got " + std::to_string(r));
  const int k = 6 - r;
  return {12 / k, 6 * r / k, 4 * r / k};
}

}  // namespace meshsum
