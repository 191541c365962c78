#pragma once

#include <cstdint>

#include "meshsum/growth.hpp"
#include "meshsum/rational.hpp"

namespace meshsum {

/// x_{n+2} = gamma * x_{n+1} - x_n, given by its first two terms.
struct RecurrenceSeries {
  std::int64_t gamma = 0;
  BigInt x1;
  BigInt x2;
};

/// Formal counts of the infinite mesh.
struct MeshInvariants {
  BigRational v, e, f;
  friend bool operator==(const MeshInvariants&, const MeshInvariants&) = default;
};

/// Rational continuation of sum_{n>=1} x_n t^n:
///   ((t - gamma t^2) x1 + t^2 x2) / (1 - gamma t + t^2).
/// Throws PoleError when t is a root of the denominator.
BigRational generating_value(const RecurrenceSeries& s, const BigRational& t);

/// Value of the continuation at t = 1: ((1 - gamma) x1 + x2) / (2 - gamma).
/// Throws UndefinedSum when gamma = 2.
BigRational euler_sum(const RecurrenceSeries& s);

/// ((r - 5) x1 - x2) / (r - 6) for x_{n+2} = (r - 4) x_{n+1} - x_n.
/// Throws UndefinedSum when r = 6.
BigRational euler_sum_by_lemma(int r, const BigInt& x1, const BigInt& x2);

/// sum_{n=1}^{N} x_n t^n, iterating the recurrence. Throws DomainError for N < 1.
BigRational partial_sum(const RecurrenceSeries& s, const BigRational& t, int N);

/// (-6, -3r, -2r) / (r - 6). Throws DomainError for r < 7.
MeshInvariants mesh_invariants(int r);

/// v_M = v_0 + EulerSum(v_1, v_2, ...), likewise e_M and f_M, starting from
/// the seed disk's counts and the predicted increments.
MeshInvariants mesh_invariants_from_seed(const SeedDescriptor& seed);
MeshInvariants mesh_invariants_from_seed(SeedKind kind, int r);

bool euler_formula_check(const MeshInvariants& m);

}  // namespace meshsum
