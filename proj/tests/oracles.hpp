#pragma once

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "dynkin/exactlin.hpp"
#include "dynkin/polyhedron.hpp"
#include "dynkin/random.hpp"
#include "dynkin/rootsys.hpp"

namespace oracle {

using namespace dynkin;

// Upward-closed subsets by filtering all 2^N subsets; the order relation is
// recomputed from coordinates rather than read from the cover table.
inline std::vector<std::vector<bool>> brute_force_ideals(const RootSystem& rs) {
  const int n = rs.num_positive();
  auto leq = [&](int a, int b) {
    const auto& x = rs.positive_root(a).coords;
    const auto& y = rs.positive_root(b).coords;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] > y[i]) return false;
    return true;
  };
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && !(mask >> b & 1) && leq(a, b)) closed = false;
    if (!closed) continue;
    std::vector<bool> m(n);
    for (int a = 0; a < n; ++a) m[a] = mask >> a & 1;
    out.push_back(m);
  }
  return out;
}

// Minimum-norm point by enumerating every subset of constraints, projecting
// the origin onto the subset's affine hull and keeping the feasible
// projection of least norm. nullopt when no projection is feasible.
inline std::optional<RatVec> brute_force_min_norm(const Polyhedron& p, const RatMat& g) {
  const int n = p.dim;
  const int m = static_cast<int>(p.constraints.size());
  std::optional<RatVec> best;
  Rat best_norm;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) rows.push_back(i);
    const int k = static_cast<int>(rows.size());
    if (k > n) continue;
    RatMat kkt(n + k, n + k);
    RatVec rhs(n + k);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) kkt(r, c) = g(r, c);
    for (int j = 0; j < k; ++j) {
      const auto& con = p.constraints[rows[j]];
      for (int c = 0; c < n; ++c) {
        kkt(n + j, c) = con.normal[c];
        kkt(c, n + j) = -con.normal[c];
      }
      rhs[n + j] = con.bound;
    }
    const auto sol = solve_linear(kkt, rhs);
    if (!sol) continue;
    RatVec x(n);
    for (int c = 0; c < n; ++c) x[c] = sol->particular[c];
    bool feasible = true;
    for (const auto& con : p.constraints) {
      Rat lhs = 0;
      for (int c = 0; c < n; ++c) lhs += con.normal[c] * x[c];
      if (con.sense == Sense::kGreaterEq ? lhs < con.bound : lhs > con.bound) feasible = false;
    }
    if (!feasible) continue;
    const Rat norm = quadratic_form(g, x);
    if (!best || norm < best_norm) {
      best = x;
      best_norm = norm;
    }
  }
  return best;
}

inline Rat random_rat(SplitMix64& rng, int span, int max_den) {
  const long num = static_cast<long>(rng.below(2 * span + 1)) - span;
  const long den = 1 + static_cast<long>(rng.below(max_den));
  return make_rat(num, den);
}

inline Polyhedron random_polyhedron(SplitMix64& rng) {
  Polyhedron p;
  p.dim = 1 + static_cast<int>(rng.below(3));
  const int m = 1 + static_cast<int>(rng.below(6));
  for (int i = 0; i < m; ++i) {
    Constraint c;
    c.normal.assign(p.dim, 0);
    while (std::all_of(c.normal.begin(), c.normal.end(), [](int v) { return v == 0; }))
      for (auto& v : c.normal) v = static_cast<int>(rng.below(7)) - 3;
    c.bound = random_rat(rng, 3, 3);
    c.sense = rng.below(2) ? Sense::kGreaterEq : Sense::kLessEq;
    p.constraints.push_back(c);
  }
  return p;
}

// M^T M + I for a random integer M: symmetric positive definite.
inline RatMat random_spd(SplitMix64& rng, int n) {
  RatMat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = static_cast<long>(rng.below(5)) - 2;
  return m.transpose() * m + RatMat::identity(n);
}

inline Rat random_positive_rat(SplitMix64& rng) {
  return make_rat(1 + static_cast<long>(rng.below(9)), 1 + static_cast<long>(rng.below(9)));
}

}  // namespace oracle
