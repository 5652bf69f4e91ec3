#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynkin/minnorm.hpp"
#include "dynkin/rootsys.hpp"
#include "dynkin/signtypes.hpp"
#include "oracles.hpp"

using namespace dynkin;

namespace {
Constraint ge(std::vector<int> n, Rat b) { return Constraint{std::move(n), std::move(b), Sense::kGreaterEq}; }
Constraint le(std::vector<int> n, Rat b) { return Constraint{std::move(n), std::move(b), Sense::kLessEq}; }
}  // namespace

TEST_CASE("feasible_point examples") {
  auto r = feasible_point(Polyhedron{1, {ge({1}, 0)}});
  REQUIRE(r.feasible);
  CHECK(r.point[0] >= 0);

  const Polyhedron bad{1, {ge({1}, 1), le({1}, 0)}};
  r = feasible_point(bad);
  CHECK_FALSE(r.feasible);
  CHECK(verify_farkas(bad, r.farkas));
  CHECK_FALSE(verify_farkas(bad, RatVec{1, 0}));

  r = feasible_point(Polyhedron{2, {ge({1, 0}, 1), ge({0, 1}, 1)}});
  REQUIRE(r.feasible);
  CHECK(r.point[0] >= 1);
  CHECK(r.point[1] >= 1);
}

TEST_CASE("lp_minimize") {
  const Polyhedron p{2, {ge({1, 0}, 1), ge({0, 1}, 2), le({1, 1}, 5)}};
  auto r = lp_minimize(p, RatVec{1, 1});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.value == 3);
  r = lp_minimize(Polyhedron{1, {ge({1}, 0)}}, RatVec{-1});
  CHECK(r.status == LpStatus::kUnbounded);
  CHECK(solve_standard_lp(RatMat::from_ints({{1, 1}}), RatVec{-1}, RatVec{1, 1}).status == LpStatus::kInfeasible);
}

TEST_CASE("min_norm_point examples") {
  const auto a1 = build_root_system({'A', 1});
  auto c = min_norm_point(Polyhedron{1, {ge({1}, 1)}}, a1.gram_coweight());
  CHECK(c.minimizer == RatVec{1});

  const auto a2 = build_root_system({'A', 2});
  const Polyhedron mid{2, {ge({1, 1}, 1), le({1, 0}, 1), le({0, 1}, 1), ge({1, 0}, 0), ge({0, 1}, 0)}};
  c = min_norm_point(mid, a2.gram_coweight());
  CHECK(c.minimizer == RatVec{make_rat(1, 2), make_rat(1, 2)});
  CHECK(c.norm_squared == make_rat(1, 2));
  CHECK(verify_certificate(mid, a2.gram_coweight(), c).passed);

  const Polyhedron top{2, {ge({1, 0}, 1), ge({0, 1}, 1)}};
  c = min_norm_point(top, a2.gram_coweight());
  CHECK(c.minimizer == RatVec{1, 1});
  CHECK(c.active_set == std::vector<int>{0, 1});

  CHECK_THROWS_AS(min_norm_point(Polyhedron{1, {ge({1}, 1), le({1}, 0)}}, a1.gram_coweight()), InfeasiblePolyhedron);
  c = min_norm_point(Polyhedron{2, {}}, a2.gram_coweight());
  CHECK(c.minimizer.is_zero());
}

TEST_CASE("verify_certificate rejects tampered certificates") {
  const auto a2 = build_root_system({'A', 2});
  const Polyhedron top{2, {ge({1, 0}, 1), ge({0, 1}, 1)}};
  const auto c = min_norm_point(top, a2.gram_coweight());
  REQUIRE(verify_certificate(top, a2.gram_coweight(), c).passed);

  auto neg = c;
  neg.multipliers[0] = -neg.multipliers[0];
  CHECK_FALSE(verify_certificate(top, a2.gram_coweight(), neg).passed);

  auto moved = c;
  moved.minimizer = RatVec{2, 1};
  CHECK_FALSE(verify_certificate(top, a2.gram_coweight(), moved).passed);

  auto norm = c;
  norm.norm_squared += 1;
  CHECK_FALSE(verify_certificate(top, a2.gram_coweight(), norm).passed);
}

TEST_CASE("property: agreement with the brute-force active-set oracle") {
  SplitMix64 rng(2024);
  int feasible = 0;
  for (int t = 0; t < 500; ++t) {
    const auto p = oracle::random_polyhedron(rng);
    const auto g = oracle::random_spd(rng, p.dim);
    const auto expect = oracle::brute_force_min_norm(p, g);
    CAPTURE(t);
    if (!expect) {
      const auto f = feasible_point(p);
      CHECK_FALSE(f.feasible);
      CHECK(verify_farkas(p, f.farkas));
      continue;
    }
    ++feasible;
    const auto c = min_norm_point(p, g);
    CHECK(c.minimizer == *expect);
    CHECK(verify_certificate(p, g, c).passed);
    for (int s = 0; s < 3; ++s) {
      const Rat k = oracle::random_positive_rat(rng);
      CHECK(min_norm_point(p, k * g).minimizer == c.minimizer);
    }
  }
  CHECK(feasible > 250);
}

TEST_CASE("property: adding a constraint never lowers the minimum") {
  SplitMix64 rng(99);
  for (int t = 0; t < 200; ++t) {
    auto p = oracle::random_polyhedron(rng);
    const auto g = oracle::random_spd(rng, p.dim);
    if (!feasible_point(p).feasible) continue;
    const Rat before = min_norm_point(p, g).norm_squared;
    p.constraints.push_back(oracle::random_polyhedron(rng).constraints.front());
    p.constraints.back().normal.resize(p.dim, 1);
    if (!feasible_point(p).feasible) continue;
    CHECK(min_norm_point(p, g).norm_squared >= before);
  }
}

TEST_CASE("sign-type regions are never empty and certify") {
  for (const char* t : {"A3", "B3", "C3", "G2", "D4"}) {
    const auto rs = build_root_system(RootSystemSpec::parse(t));
    for (const auto& ideal : enumerate_ideals(rs)) {
      const auto p = closure_polyhedron(rs, sign_type_of_ideal(ideal));
      const auto c = min_norm_point(p, rs.gram_coweight());
      CHECK(verify_certificate(p, rs.gram_coweight(), c).passed);
      CHECK(c.minimizer == *oracle::brute_force_min_norm(p, rs.gram_coweight()));
    }
  }
}
