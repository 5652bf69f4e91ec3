#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dynkin/rootsys.hpp"

using namespace dynkin;

namespace {
const char* kTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2", "F4"};

std::vector<int> heights(const RootSystem& rs) {
  std::vector<int> h;
  for (const auto& r : rs.positive_roots()) h.push_back(r.height);
  return h;
}
}  // namespace

TEST_CASE("spec parsing and validation") {
  CHECK(RootSystemSpec::parse("A2") == RootSystemSpec{'A', 2});
  CHECK(RootSystemSpec::parse("G2").label() == "G2");
  CHECK_THROWS(RootSystemSpec{'G', 3}.validate());
  CHECK_THROWS(RootSystemSpec{'D', 2}.validate());
  CHECK_THROWS(RootSystemSpec{'B', 1}.validate());
  CHECK_THROWS(build_root_system(RootSystemSpec{'E', 5}));
  CHECK_NOTHROW(RootSystemSpec{'C', 2}.validate());
}

TEST_CASE("build_root_system examples") {
  const auto a2 = build_root_system({'A', 2});
  CHECK(a2.num_positive() == 3);
  CHECK(a2.root_coords(a2.highest_root_index()) == std::vector<int>{1, 1});
  CHECK(heights(a2) == std::vector<int>{1, 1, 2});

  const auto g2 = build_root_system({'G', 2});
  CHECK(g2.num_positive() == 6);
  CHECK(g2.positive_root(g2.highest_root_index()).height == 5);

  const auto a1 = build_root_system({'A', 1});
  CHECK(a1.num_positive() == 1);
  CHECK(a1.cartan_matrix() == std::vector<std::vector<int>>{{2}});
}

TEST_CASE("classical root counts and Weyl orders") {
  const std::map<std::string, std::pair<int, std::uint64_t>> table = {
      {"A1", {1, 2}},  {"A2", {3, 6}},   {"A3", {6, 24}}, {"A4", {10, 120}}, {"B2", {4, 8}}, {"B3", {9, 48}},
      {"C3", {9, 48}}, {"D4", {12, 192}}, {"G2", {6, 12}}, {"F4", {24, 1152}}, {"E6", {36, 51840}}};
  for (const auto& [name, expect] : table) {
    CAPTURE(name);
    const auto rs = build_root_system(RootSystemSpec::parse(name));
    CHECK(rs.num_positive() == expect.first);
    CHECK(weyl_group_order(rs.spec()) == expect.second);
  }
}

TEST_CASE("pairing and norm examples") {
  const auto a1 = build_root_system({'A', 1});
  const auto a2 = build_root_system({'A', 2});
  CHECK(pairing(a2, a2.positive_root(0), ChamberPoint::from_ints({1, 0})) == 1);
  CHECK(pairing(a2, a2.positive_root(a2.highest_root_index()), ChamberPoint::from_ints({1, 1})) == 2);
  CHECK(pairing(a2, a2.positive_root(2), ChamberPoint::from_ints({0, 0})) == 0);
  CHECK(norm_squared(a2, ChamberPoint::from_ints({0, 0})) == 0);
  CHECK(norm_squared(a1, ChamberPoint::from_ints({1})) == make_rat(1, 2));
  CHECK(norm_squared(a2, ChamberPoint::from_ints({1, 1})) == 2);
  CHECK(a2.gram_coweight() == RatMat{{make_rat(2, 3), make_rat(1, 3)}, {make_rat(1, 3), make_rat(2, 3)}});
}

TEST_CASE("long roots have squared length 2") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    const auto rs = build_root_system(RootSystemSpec::parse(t));
    for (int i = 0; i < rs.num_positive(); ++i) {
      const Rat len = rs.root_length2(i);
      if (rs.positive_root(i).is_long) CHECK(len == 2);
      else CHECK(len < 2);
    }
  }
}

TEST_CASE("weyl_elements examples and ceiling") {
  CHECK(weyl_elements(build_root_system({'A', 1})).size() == 2);
  CHECK(weyl_elements(build_root_system({'B', 2})).size() == 8);
  CHECK(weyl_elements(build_root_system({'G', 2})).size() == 12);
  CHECK(weyl_elements(build_root_system({'A', 2})).size() == 6);
  CHECK_THROWS_AS(weyl_elements(build_root_system({'A', 4}), 100), WeylCeilingExceeded);
}

TEST_CASE("property: Weyl group preserves the Gram matrix") {
  for (const char* t : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(t);
    const auto rs = build_root_system(RootSystemSpec::parse(t));
    const int r = rs.rank();
    const auto& g = rs.gram_coweight();
    std::set<std::vector<int>> seen;
    for (const auto& w : weyl_elements(rs)) {
      CHECK(seen.insert(w.matrix).second);
      RatMat m(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = w.matrix[i * r + j];
      CHECK(m.transpose() * g * m == g);
      const RatVec x{make_rat(1, 2), -3, make_rat(2, 7)};
      RatVec y(r);
      for (int i = 0; i < r; ++i) y[i] = x[i];
      CHECK(quadratic_form(g, w.apply(y)) == quadratic_form(g, y));
    }
  }
}

TEST_CASE("dominant_representative examples") {
  const auto a1 = build_root_system({'A', 1});
  const auto a2 = build_root_system({'A', 2});
  auto d = dominant_representative(a2, ChamberPoint::from_ints({1, 1}));
  CHECK(d.point == ChamberPoint::from_ints({1, 1}));
  CHECK(d.word.empty());
  d = dominant_representative(a1, ChamberPoint::from_ints({-3}));
  CHECK(d.point == ChamberPoint::from_ints({3}));
  CHECK(d.word == std::vector<int>{0});
  d = dominant_representative(a2, ChamberPoint::from_ints({-1, 2}));
  CHECK(d.point == ChamberPoint::from_ints({1, 1}));
  RatVec back = d.point.coords;
  for (auto it = d.word.rbegin(); it != d.word.rend(); ++it) back = reflect(a2, *it, back);
  CHECK(back == RatVec::from_ints({-1, 2}));
}

TEST_CASE("property: theta dominates on dominant points") {
  for (const char* t : kTypes) {
    const auto rs = build_root_system(RootSystemSpec::parse(t));
    const auto& theta = rs.positive_root(rs.highest_root_index());
    std::vector<int> x(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) x[i] = (i * 7 + 3) % 4;
    const auto p = ChamberPoint::from_ints(x);
    for (const auto& a : rs.positive_roots()) CHECK(pairing(rs, theta, p) >= pairing(rs, a, p));
  }
}

TEST_CASE("root poset covers are graded by height") {
  for (const char* t : kTypes) {
    const auto rs = build_root_system(RootSystemSpec::parse(t));
    for (const auto& [lo, hi] : rs.poset_covers()) {
      CHECK(rs.positive_root(hi).height == rs.positive_root(lo).height + 1);
      CHECK(rs.poset_leq(lo, hi));
    }
  }
}

TEST_CASE("Catalan numbers and exponents") {
  const std::map<std::string, std::uint64_t> cat = {{"A2", 5}, {"A3", 14}, {"A4", 42}, {"B2", 6}, {"B3", 20},
                                                    {"C3", 20}, {"D4", 50}, {"G2", 8},  {"F4", 105}};
  for (const auto& [t, c] : cat) CHECK(catalan_number(RootSystemSpec::parse(t)) == c);
  CHECK(coxeter_number({'G', 2}) == 6);
  CHECK(exponents({'F', 4}) == std::vector<int>{1, 5, 7, 11});
}

TEST_CASE("verify_jacobi passes and catches corruption") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    CHECK(verify_jacobi(build_root_system(RootSystemSpec::parse(t))).passed);
  }
  const auto a2 = build_root_system({'A', 2});
  const auto bad = a2.with_structure_constant(0, 1, 2);
  const auto res = verify_jacobi(bad);
  CHECK_FALSE(res.passed);
  CHECK_FALSE(res.detail.empty());
}

TEST_CASE("structure constants follow root strings") {
  for (const char* t : {"A2", "B2", "G2", "B3", "F4"}) {
    const auto rs = build_root_system(RootSystemSpec::parse(t));
    const int n = 2 * rs.num_positive();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (rs.root_sum(a, b) < 0) {
          CHECK(rs.structure_constant(a, b) == 0);
          continue;
        }
        int p = 0;  // largest p with b - p a a root
        int cur = b;
        while (true) {
          const int next = rs.root_sum(cur, rs.negate(a));
          if (next < 0) break;
          ++p;
          cur = next;
        }
        CHECK(std::abs(rs.structure_constant(a, b)) == p + 1);
      }
  }
}
