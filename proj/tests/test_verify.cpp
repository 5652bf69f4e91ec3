#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynkin/verify.hpp"

using namespace dynkin;

namespace {
AmbiguityClass single(std::vector<int> marks) { return AmbiguityClass{{WeightedDynkinDiagram{marks}}}; }

VerifyConfig quick() {
  VerifyConfig c;
  c.jobs = 1;
  return c;
}

ChamberPoint pt(std::initializer_list<Rat> v) { return ChamberPoint(RatVec(v)); }
}  // namespace

TEST_CASE("checks parsing") {
  const auto c = Checks::parse("theorem,propd-weak");
  CHECK(c.theorem);
  CHECK(c.propd_weak);
  CHECK_FALSE(c.prop31);
  CHECK(c.to_string() == "theorem,propd-weak");
  CHECK_THROWS_AS(Checks::parse("theorem,bogus"), std::invalid_argument);
}

TEST_CASE("build_nregions examples") {
  const auto a1 = build_root_system({'A', 1});
  auto data = build_nregions(a1, enumerate_ideals(a1), quick());
  REQUIRE(data.regions.size() == 2);
  CHECK(data.regions[0].orbit_class == single({0}));
  CHECK(data.regions[1].orbit_class == single({2}));

  const auto a2 = build_root_system({'A', 2});
  data = build_nregions(a2, enumerate_ideals(a2), quick());
  REQUIRE(data.regions.size() == 3);
  CHECK(data.regions[0].ideal_indices.size() == 1);
  CHECK(data.regions[1].orbit_class == single({1, 1}));
  CHECK(data.regions[1].ideal_indices.size() == 3);
  CHECK(data.regions[2].ideal_indices.size() == 1);

  const auto b2 = build_root_system({'B', 2});
  CHECK(build_nregions(b2, enumerate_ideals(b2), quick()).regions.size() == 4);
}

TEST_CASE("min_point_of_nregion examples") {
  const auto a1 = build_root_system({'A', 1});
  auto data = build_nregions(a1, enumerate_ideals(a1), quick());
  CHECK(min_point_of_nregion(a1, data, data.regions[1]).minimizers == std::vector<ChamberPoint>{pt({1})});

  const auto a2 = build_root_system({'A', 2});
  data = build_nregions(a2, enumerate_ideals(a2), quick());
  auto m = min_point_of_nregion(a2, data, data.regions[1]);
  CHECK(m.minimizers == std::vector<ChamberPoint>{pt({make_rat(1, 2), make_rat(1, 2)})});
  CHECK(m.regions.size() == 3);
  for (const auto& r : m.regions) CHECK(r.certificate_ok);
  m = min_point_of_nregion(a2, data, data.regions[2]);
  CHECK(m.minimizers == std::vector<ChamberPoint>{pt({1, 1})});
}

TEST_CASE("verify_theorem examples") {
  auto rep = verify_theorem({'A', 1}, quick());
  CHECK(rep.theorem_passed());
  CHECK(rep.orbits.size() == 2);

  rep = verify_theorem({'B', 2}, quick());
  CHECK(rep.theorem_passed());
  const auto b2 = rep.minimum_set();
  CHECK(b2 == std::vector<ChamberPoint>{pt({0, 0}), pt({0, make_rat(1, 2)}), pt({1, 0}), pt({1, 1})});

  rep = verify_theorem({'G', 2}, quick());
  CHECK(rep.theorem_passed());
  CHECK(rep.orbits.size() == 5);
  const auto g2 = rep.minimum_set();
  auto has = [&](const ChamberPoint& p) { return std::find(g2.begin(), g2.end(), p) != g2.end(); };
  CHECK(has(pt({0, 0})));
  CHECK(has(pt({make_rat(1, 2), 0})));
  CHECK(has(pt({1, 1})));
  CHECK_FALSE(has(pt({make_rat(1, 2), make_rat(1, 2)})));
  CHECK_FALSE(has(pt({1, make_rat(1, 3)})));
}

TEST_CASE("report invariants hold") {
  for (const RootSystemSpec spec : {RootSystemSpec{'A', 3}, RootSystemSpec{'C', 3}}) {
    const auto rep = verify_theorem(spec, quick());
    CHECK(rep.partition_ok);
    CHECK(rep.zero_orbit_ok);
    CHECK(rep.jacobi_ok);
    for (const auto& o : rep.orbits) {
      CHECK(o.exact_match);
      CHECK(o.norm_match);
      CHECK(o.certificates_ok);
      CHECK_FALSE(o.ideal_indices.empty());
    }
  }
}

TEST_CASE("verify_prop_half_in_region examples") {
  const auto a2 = build_root_system({'A', 2});
  const auto data = build_nregions(a2, enumerate_ideals(a2), quick());
  for (const auto& marks : {std::vector<int>{0, 0}, {1, 1}, {2, 2}}) {
    const auto r = verify_prop_half_in_region(a2, data, {marks});
    CHECK(r.passed);
  }
  // A non-realised diagram fails: its Dynkin ideal belongs to another orbit.
  CHECK_FALSE(verify_prop_half_in_region(a2, data, {{2, 0}}).passed);
}

TEST_CASE("verify_corollary examples") {
  const auto a2 = build_root_system({'A', 2});
  auto r = verify_corollary(a2, {{0, 0}}, 1);
  CHECK(r.samples == 0);
  CHECK(r.passed());
  r = verify_corollary(a2, {{2, 2}}, 1);
  CHECK(r.samples >= 64);
  CHECK(r.passed());
  CHECK(std::find(r.suborbits_seen.begin(), r.suborbits_seen.end(), single({1, 1})) != r.suborbits_seen.end());
  CHECK(norm_squared(a2, dynkin_point({{1, 1}})) < norm_squared(a2, dynkin_point({{2, 2}})));

  const auto b2 = build_root_system({'B', 2});
  CHECK(verify_corollary(b2, {{2, 2}}, 1).passed());
}

TEST_CASE("verify_property_d examples") {
  const auto a2 = build_root_system({'A', 2});
  const auto ideals = enumerate_ideals(a2);

  PropertyDOptions weak;
  auto r = verify_property_d(a2, ideals.front(), weak);
  REQUIRE(r.certificates.size() == 1);
  CHECK(r.certificates[0].e.is_zero());
  CHECK(r.certificates[0].relations_ok);

  for (const auto& marks : {std::vector<int>{1, 1}, {2, 2}}) {
    weak.preferred = WeightedDynkinDiagram{marks};
    r = verify_property_d(a2, dynkin_ideal(a2, {marks}), weak);
    REQUIRE(r.complete());
    CHECK(r.certificates[0].weyl_word.empty());
    CHECK(r.certificates[0].relations_ok);
    CHECK(check_property_d_certificate(a2, dynkin_ideal(a2, {marks}), r.certificates[0]));
  }

  const auto a3 = build_root_system({'A', 3});
  PropertyDOptions strong;
  strong.mode = PropertyDMode::kStrong;
  for (const auto& ideal : enumerate_ideals(a3)) {
    r = verify_property_d(a3, ideal, strong);
    CHECK(r.complete());
    for (const auto& c : r.certificates) CHECK(check_property_d_certificate(a3, ideal, c));
  }
}

TEST_CASE("tampered property-D certificates are rejected") {
  const auto a2 = build_root_system({'A', 2});
  const auto ideal = dynkin_ideal(a2, {{2, 2}});
  PropertyDOptions weak;
  auto cert = verify_property_d(a2, ideal, weak).certificates.at(0);
  auto bad = cert;
  bad.f *= Rat(2);
  CHECK_FALSE(check_property_d_certificate(a2, ideal, bad));
  bad = cert;
  bad.weyl_word = {0};
  CHECK_FALSE(check_property_d_certificate(a2, ideal, bad));
  bad = cert;
  bad.e = bad.e + LieElement::root_vector(a2, a2.num_positive());
  CHECK_FALSE(check_property_d_certificate(a2, ideal, bad));
}

TEST_CASE("verify_supp_region examples") {
  const auto a1 = build_root_system({'A', 1});
  PropertyDOptions weak;
  auto cert = verify_property_d(a1, dynkin_ideal(a1, {{2}}), weak).certificates.at(0);
  auto r = verify_supp_region(a1, cert);
  CHECK(r.passed);
  CHECK(r.minimizer == RatVec{1});

  const auto a2 = build_root_system({'A', 2});
  PropertyDCertificate c;
  c.target = single({2, 2});
  c.diagram = {{2, 2}};
  c.h_coweight = {2, 2};
  c.e = LieElement::root_vector(a2, a2.find_root({1, 0})) + LieElement::root_vector(a2, a2.find_root({0, 1}));
  c.h = LieElement::from_coweight(a2, RatVec{2, 2});
  c.f = *triple_completion(a2, c.e, c.h);
  r = verify_supp_region(a2, c);
  CHECK(r.passed);
  CHECK(r.minimizer == RatVec{1, 1});
}
