#include "meshsum/euler_sum.hpp"

#include <string>

#include "meshsum/error.hpp"

namespace meshsum {

namespace {

std::string denominator_roots(std::int64_t gamma) {
  // Roots of t^2 - gamma t + 1.
  const std::string g = std::to_string(gamma);
  const std::string disc = std::to_string(gamma * gamma - 4);
  return "(" + g + " + sqrt(" + disc + "))/2, (" + g + " - sqrt(" + disc + "))/2";
}

MeshInvariants sum_increments(int r, const DiskCounts& initial, const LayerPrediction& first,
                              const LayerPrediction& second) {
  const std::int64_t gamma = r - 4;
  auto total = [&](const BigInt& x0, const BigInt& x1, const BigInt& x2) {
    return BigRational(x0) + euler_sum(RecurrenceSeries{gamma, x1, x2});
  };
  return {total(initial.v, first.deltas.v, second.deltas.v), total(initial.e, first.deltas.e, second.deltas.e),
          total(initial.f, first.deltas.f, second.deltas.f)};
}

}  // namespace

BigRational generating_value(const RecurrenceSeries& s, const BigRational& t) {
  const BigRational gamma(s.gamma);
  const BigRational t2 = t * t;
  const BigRational denominator = BigRational(1) - gamma * t + t2;
  if (denominator.is_zero()) {
    throw PoleError("generating function has a pole at t = " + t.to_string() + "; roots of 1 - gamma t + t^2 are " +
                        denominator_roots(s.gamma),
                    denominator_roots(s.gamma));
  }
  return ((t - gamma * t2) * BigRational(s.x1) + t2 * BigRational(s.x2)) / denominator;
}

BigRational euler_sum(const RecurrenceSeries& s) {
  if (s.gamma == 2) throw UndefinedSum("Euler sum undefined for gamma = 2");
  return BigRational(BigInt(1 - s.gamma) * s.x1 + s.x2, BigInt(2 - s.gamma));
}

BigRational euler_sum_by_lemma(int r, const BigInt& x1, const BigInt& x2) {
  if (r == 6) throw UndefinedSum("Euler sum undefined for r = 6");
  return BigRational(BigInt(r - 5) * x1 - x2, BigInt(r - 6));
}

BigRational partial_sum(const RecurrenceSeries& s, const BigRational& t, int N) {
  if (N < 1) throw DomainError("partial sum needs N >= 1");
  const BigInt gamma(s.gamma);
  BigRational sum;
  BigRational power = t;
  BigInt prev = s.x1;
  BigInt cur = s.x2;
  sum = BigRational(prev) * power;
  for (int n = 2; n <= N; ++n) {
    power = power * t;
    sum = sum + BigRational(cur) * power;
    BigInt next = gamma * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

MeshInvariants mesh_invariants(int r) {
  if (r < kMinDegree) {
    throw DomainError(r == 6 ? std::string("degree 6 excluded") : "mesh degree must be at least 7, got " + std::to_string(r));
  }
  const BigInt k(r - 6);
  return {BigRational(BigInt(-6), k), BigRational(BigInt(-3 * static_cast<std::int64_t>(r)), k),
          BigRational(BigInt(-2 * static_cast<std::int64_t>(r)), k)};
}

MeshInvariants mesh_invariants_from_seed(const SeedDescriptor& seed) {
  const auto layers = predict_layers(seed, 2);
  return sum_increments(seed.r, counts_from_boundary(seed), layers[0], layers[1]);
}

MeshInvariants mesh_invariants_from_seed(SeedKind kind, int r) {
  const auto layers = predict_seed(kind, r, 2);
  return sum_increments(r, seed_counts(kind, r), layers[0], layers[1]);
}

bool euler_formula_check(const MeshInvariants& m) { return m.v - m.e + m.f == BigRational(1); }

}  // namespace meshsum
