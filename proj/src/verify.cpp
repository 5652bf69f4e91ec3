#include "dynkin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dynkin/parallel.hpp"
#include "dynkin/random.hpp"

namespace dynkin {

namespace {

// Stream tags keep the randomised phases on disjoint seed streams.
constexpr std::uint64_t kCorollaryTag = 0x100000000ull;
constexpr std::uint64_t kWeakTag = 0x200000000ull;
constexpr std::uint64_t kStrongTag = 0x300000000ull;

WeightedDynkinDiagram zero_diagram(const RootSystem& rs) { return {std::vector<int>(rs.rank(), 0)}; }

bool is_zero_class(const AmbiguityClass& c) {
  const auto& m = c.representative().marks;
  return std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
}

Rat dynkin_norm(const RootSystem& rs, const WeightedDynkinDiagram& d) { return norm_squared(rs, dynkin_point(d)); }

// First index of the ideal with these members, or -1.
int find_ideal(const std::vector<Ideal>& ideals, const Ideal& target) {
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i] == target) return static_cast<int>(i);
  return -1;
}

std::vector<int> apply_word(const RootSystem& rs, const std::vector<int>& word, const std::vector<int>& x) {
  RatVec v = RatVec::from_ints(x);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(rs, *it, v);
  std::vector<int> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = static_cast<int>(v[i].get_num().get_si());
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Checks Checks::parse(const std::string& list) {
  Checks c;
  c.theorem = c.prop31 = c.corollary = c.propd_weak = c.propd_strong = false;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name == "theorem") c.theorem = true;
    else if (name == "prop31") c.prop31 = true;
    else if (name == "corollary") c.corollary = true;
    else if (name == "propd-weak") c.propd_weak = true;
    else if (name == "propd-strong") c.propd_strong = true;
    else if (name == "all") c.theorem = c.prop31 = c.corollary = c.propd_weak = c.propd_strong = true;
    else if (!name.empty()) throw std::invalid_argument("unknown check: " + name);
  }
  return c;
}

std::string Checks::to_string() const {
  std::vector<std::string> names;
  if (theorem) names.push_back("theorem");
  if (prop31) names.push_back("prop31");
  if (corollary) names.push_back("corollary");
  if (propd_weak) names.push_back("propd-weak");
  if (propd_strong) names.push_back("propd-strong");
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out;
}

NRegionData build_nregions(const RootSystem& rs, std::vector<Ideal> ideals, const VerifyConfig& config) {
  NRegionData data;
  data.ideals = std::move(ideals);
  data.ideal_orbits.resize(data.ideals.size());
  parallel_for(data.ideals.size(), config.jobs, [&](std::size_t i) {
    data.ideal_orbits[i] =
        associated_orbit(rs, data.ideals[i], derive_seed(config.seed, i), config.trials, config.coeff_range);
  });
  std::map<std::pair<int, AmbiguityClass>, NRegion> grouped;
  for (std::size_t i = 0; i < data.ideals.size(); ++i) {
    const auto& o = data.ideal_orbits[i];
    auto& r = grouped[{o.dimension, o.orbit}];
    r.orbit_class = o.orbit;
    r.orbit_dimension = o.dimension;
    r.ideal_indices.push_back(static_cast<int>(i));
    r.converged = r.converged && o.converged;
  }
  for (auto& [key, r] : grouped) data.regions.push_back(std::move(r));
  return data;
}

NRegionMinimum min_point_of_nregion(const RootSystem& rs, const NRegionData& data, const NRegion& region, int jobs) {
  if (region.ideal_indices.empty()) throw std::invalid_argument("min_point_of_nregion: empty region");
  NRegionMinimum out;
  out.regions.resize(region.ideal_indices.size());
  parallel_for(region.ideal_indices.size(), jobs, [&](std::size_t k) {
    auto& rc = out.regions[k];
    rc.ideal_index = region.ideal_indices[k];
    rc.polyhedron = closure_polyhedron(rs, sign_type_of_ideal(data.ideals[rc.ideal_index]));
    rc.certificate = min_norm_point(rc.polyhedron, rs.gram_coweight());
    rc.certificate_ok = verify_certificate(rc.polyhedron, rs.gram_coweight(), rc.certificate).passed;
  });
  out.norm_squared = out.regions.front().certificate.norm_squared;
  for (const auto& rc : out.regions) out.norm_squared = std::min(out.norm_squared, rc.certificate.norm_squared);
  std::set<ChamberPoint> best;
  for (const auto& rc : out.regions)
    if (rc.certificate.norm_squared == out.norm_squared) best.insert(ChamberPoint(rc.certificate.minimizer));
  out.minimizers.assign(best.begin(), best.end());
  return out;
}

Prop31Result verify_prop_half_in_region(const RootSystem& rs, const NRegionData& data, const WeightedDynkinDiagram& d) {
  Prop31Result res;
  res.diagram = d;
  const SignType s = sign_type_of(rs, half_dynkin_point(d));
  const Ideal plus = ideal_of_sign_type(rs, s);
  res.plus_ideal_is_dynkin_ideal = plus == dynkin_ideal(rs, d);
  const int idx = find_ideal(data.ideals, plus);
  res.orbit_matches = idx >= 0 && data.ideal_orbits[idx].orbit.contains(d);
  res.passed = res.plus_ideal_is_dynkin_ideal && res.orbit_matches;
  return res;
}

CorollaryResult verify_corollary(const RootSystem& rs, const WeightedDynkinDiagram& d, std::uint64_t seed, int budget,
                                 std::uint64_t coeff_range) {
  CorollaryResult res;
  res.diagram = d;
  const Ideal ideal = dynkin_ideal(rs, d);
  const auto members = ideal.member_indices();
  if (members.empty()) return res;

  std::vector<std::vector<int>> supports;
  for (int g : ideal.generators) {
    std::vector<int> s;
    for (int m : members)
      if (m != g) s.push_back(m);
    supports.push_back(s);
  }
  SplitMix64 pick(derive_seed(seed, 0));
  while (static_cast<int>(supports.size()) < budget) {
    std::vector<int> s;
    for (int m : members)
      if (pick.below(2)) s.push_back(m);
    supports.push_back(s);
  }

  const Rat own = dynkin_norm(rs, d);
  std::set<AmbiguityClass> seen;
  for (std::size_t k = 0; k < supports.size(); ++k) {
    const LieElement e = sample_on_support(rs, supports[k], derive_seed(seed, 1, k), coeff_range);
    const auto orbit = element_orbit(rs, e).orbit;
    ++res.samples;
    if (orbit.contains(d)) continue;
    ++res.proper_suborbits;
    seen.insert(orbit);
    if (!(dynkin_norm(rs, orbit.representative()) < own)) ++res.violations;
  }
  res.suborbits_seen.assign(seen.begin(), seen.end());
  return res;
}

std::vector<AmbiguityClass> orbits_meeting_ideal(const RootSystem& rs, const Ideal& ideal, std::uint64_t seed,
                                                 std::uint64_t coeff_range) {
  const auto members = ideal.member_indices();
  std::vector<std::vector<int>> supports;
  if (members.size() <= 10) {
    for (std::uint64_t mask = 0; mask < (1ull << members.size()); ++mask) {
      std::vector<int> s;
      for (std::size_t b = 0; b < members.size(); ++b)
        if (mask >> b & 1) s.push_back(members[b]);
      supports.push_back(s);
    }
  } else {
    SplitMix64 pick(derive_seed(seed, 0));
    supports.push_back({});
    supports.push_back(members);
    while (supports.size() < 1024) {
      std::vector<int> s;
      for (int m : members)
        if (pick.below(2)) s.push_back(m);
      supports.push_back(s);
    }
  }
  std::set<AmbiguityClass> seen;
  for (std::size_t k = 0; k < supports.size(); ++k)
    seen.insert(element_orbit(rs, sample_on_support(rs, supports[k], derive_seed(seed, 1, k), coeff_range)).orbit);
  return {seen.begin(), seen.end()};
}

PropertyDResult verify_property_d(const RootSystem& rs, const Ideal& ideal, const PropertyDOptions& options) {
  PropertyDResult res;
  if (options.mode == PropertyDMode::kWeak) {
    res.targets.push_back(options.associated
                              ? *options.associated
                              : associated_orbit(rs, ideal, options.seed, options.trials, options.coeff_range).orbit);
  } else {
    res.targets = orbits_meeting_ideal(rs, ideal, derive_seed(options.seed, 0), options.coeff_range);
  }

  for (std::size_t t = 0; t < res.targets.size(); ++t) {
    const AmbiguityClass& target = res.targets[t];
    if (is_zero_class(target)) {
      PropertyDCertificate cert;
      cert.target = target;
      cert.diagram = zero_diagram(rs);
      cert.h_coweight.assign(rs.rank(), 0);
      cert.e = cert.h = cert.f = LieElement::zero(rs);
      cert.relations_ok = check_property_d_certificate(rs, ideal, cert);
      res.certificates.push_back(std::move(cert));
      continue;
    }
    std::vector<WeightedDynkinDiagram> order;
    if (options.preferred && target.contains(*options.preferred)) order.push_back(*options.preferred);
    for (const auto& d : target.diagrams)
      if (order.empty() || !(d == order.front())) order.push_back(d);

    std::optional<PropertyDCertificate> found;
    for (std::size_t di = 0; di < order.size() && !found; ++di) {
      const auto images = weyl_orbit(rs, order[di].marks, options.weyl_ceiling);
      for (std::size_t w = 0; w < images.size() && !found; ++w) {
        std::vector<int> support;
        for (int m : ideal.member_indices())
          if (pairing(rs.positive_root(m).coords, RatVec::from_ints(images[w].point)) == 2) support.push_back(m);
        if (support.empty()) continue;
        ++res.witnesses_tried;
        const LieElement h = LieElement::from_coweight(rs, RatVec::from_ints(images[w].point));
        for (int s = 0; s < options.samples_per_witness && !found; ++s) {
          const std::uint64_t stream = derive_seed(derive_seed(options.seed, 1 + t, di), w, s);
          const LieElement e = sample_on_support(rs, support, stream, options.coeff_range);
          const auto f = triple_completion(rs, e, h);
          if (!f || !(element_orbit(rs, e).orbit == target)) continue;
          PropertyDCertificate cert;
          cert.target = target;
          cert.diagram = order[di];
          cert.weyl_word = images[w].word;
          cert.h_coweight = images[w].point;
          cert.e = e;
          cert.h = h;
          cert.f = *f;
          cert.relations_ok = check_property_d_certificate(rs, ideal, cert);
          found = std::move(cert);
        }
      }
    }
    if (found) res.certificates.push_back(std::move(*found));
    else res.not_found.push_back(target);
  }
  return res;
}

bool check_property_d_certificate(const RootSystem& rs, const Ideal& ideal, const PropertyDCertificate& cert) {
  for (const auto& [idx, c] : cert.e.root_part())
    if (idx >= rs.num_positive() || !ideal.contains(idx)) return false;
  if (!cert.h.in_cartan()) return false;
  if (!(bracket(rs, cert.h, cert.e) == Rat(2) * cert.e)) return false;
  if (!(bracket(rs, cert.e, cert.f) == cert.h)) return false;
  if (!(bracket(rs, cert.h, cert.f) == Rat(-2) * cert.f)) return false;
  const auto image = apply_word(rs, cert.weyl_word, cert.diagram.marks);
  if (image != cert.h_coweight) return false;
  return cert.h.cartan_coweight(rs) == RatVec::from_ints(image);
}

SuppRegionResult verify_supp_region(const RootSystem& rs, const PropertyDCertificate& cert) {
  SuppRegionResult res;
  Polyhedron p;
  p.dim = rs.rank();
  for (int idx : cert.e.support()) {
    Constraint c;
    c.normal = rs.root_coords(idx);
    c.bound = 1;
    c.sense = Sense::kGreaterEq;
    p.constraints.push_back(std::move(c));
  }
  const auto m = min_norm_point(p, rs.gram_coweight());
  res.minimizer = m.minimizer;
  const auto dom = dominant_representative(rs, ChamberPoint(Rat(2) * m.minimizer));
  for (const auto& d : cert.target.diagrams)
    if (dom.point == dynkin_point(d)) res.conjugate_to_dynkin = true;
  res.equals_half_h = m.minimizer == make_rat(1, 2) * cert.h.cartan_coweight(rs);
  res.passed = res.conjugate_to_dynkin && res.equals_half_h &&
               verify_certificate(p, rs.gram_coweight(), m).passed;
  return res;
}

bool TheoremReport::theorem_passed() const {
  if (!jacobi_ok || !partition_ok || !zero_orbit_ok) return false;
  if (!config.checks.theorem) return true;
  return std::all_of(orbits.begin(), orbits.end(),
                     [](const OrbitReport& o) { return o.exact_match && o.norm_match && o.certificates_ok; });
}

bool TheoremReport::all_passed() const {
  if (!theorem_passed()) return false;
  for (const auto& o : orbits) {
    for (const auto& p : o.prop31)
      if (!p.passed) return false;
    for (const auto& c : o.corollary)
      if (!c.passed()) return false;
    for (const auto& r : o.propd_weak)
      for (const auto& c : r.certificates)
        if (!c.relations_ok) return false;
    for (const auto& s : o.supp_region)
      if (!s.passed) return false;
  }
  for (const auto& s : propd_strong)
    for (const auto& c : s.result.certificates)
      if (!c.relations_ok) return false;
  return true;
}

bool TheoremReport::inconclusive() const {
  for (const auto& o : orbits) {
    if (!o.converged) return true;
    for (const auto& r : o.propd_weak)
      if (!r.complete()) return true;
  }
  for (const auto& s : propd_strong)
    if (!s.result.complete()) return true;
  return false;
}

std::vector<ChamberPoint> TheoremReport::minimum_set() const {
  std::set<ChamberPoint> pts;
  for (const auto& o : orbits) pts.insert(o.minimum.minimizers.begin(), o.minimum.minimizers.end());
  return {pts.begin(), pts.end()};
}

TheoremReport verify_theorem(const RootSystemSpec& spec, const VerifyConfig& config) {
  spec.validate();
  TheoremReport rep;
  rep.spec = spec;
  rep.config = config;

  auto t0 = std::chrono::steady_clock::now();
  const RootSystem rs = build_root_system(spec);
  rep.jacobi_ok = verify_jacobi(rs).passed;
  rep.timings["root_system"] = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto ideals = enumerate_ideals(rs);
  rep.ideal_count = static_cast<int>(ideals.size());
  rep.catalan = catalan_number(spec);
  for (const auto& i : ideals) rep.ideal_generators.push_back(i.generators);
  rep.timings["ideals"] = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const NRegionData data = build_nregions(rs, std::move(ideals), config);
  for (const auto& o : data.ideal_orbits) rep.ideal_orbits.push_back(o.orbit);
  rep.timings["orbits"] = seconds_since(t0);

  std::size_t total = 0;
  for (const auto& r : data.regions) total += r.ideal_indices.size();
  rep.partition_ok = total == data.ideals.size() && static_cast<std::uint64_t>(total) == rep.catalan;

  rep.orbits.resize(data.regions.size());
  for (std::size_t k = 0; k < data.regions.size(); ++k) {
    const auto& r = data.regions[k];
    auto& o = rep.orbits[k];
    o.orbit_class = r.orbit_class;
    o.orbit_dimension = r.orbit_dimension;
    o.ideal_indices = r.ideal_indices;
    o.converged = r.converged;
    for (const auto& d : r.orbit_class.diagrams) o.half_dynkin.push_back(half_dynkin_point(d));
    std::sort(o.half_dynkin.begin(), o.half_dynkin.end());
    o.expected_norm = norm_squared(rs, o.half_dynkin.front());
  }

  if (config.checks.theorem) {
    t0 = std::chrono::steady_clock::now();
    // One flat task list over all ideals, assembled per region afterwards.
    std::vector<std::pair<int, int>> tasks;
    for (std::size_t k = 0; k < data.regions.size(); ++k)
      for (std::size_t j = 0; j < data.regions[k].ideal_indices.size(); ++j)
        tasks.emplace_back(static_cast<int>(k), static_cast<int>(j));
    for (std::size_t k = 0; k < data.regions.size(); ++k)
      rep.orbits[k].minimum.regions.resize(data.regions[k].ideal_indices.size());
    parallel_for(tasks.size(), config.jobs, [&](std::size_t t) {
      const auto [k, j] = tasks[t];
      NRegion single = data.regions[k];
      single.ideal_indices = {data.regions[k].ideal_indices[j]};
      rep.orbits[k].minimum.regions[j] = min_point_of_nregion(rs, data, single, 1).regions.front();
    });
    for (auto& o : rep.orbits) {
      auto& m = o.minimum;
      m.norm_squared = m.regions.front().certificate.norm_squared;
      for (const auto& rc : m.regions) m.norm_squared = std::min(m.norm_squared, rc.certificate.norm_squared);
      std::set<ChamberPoint> best;
      for (const auto& rc : m.regions)
        if (rc.certificate.norm_squared == m.norm_squared) best.insert(ChamberPoint(rc.certificate.minimizer));
      m.minimizers.assign(best.begin(), best.end());
      o.exact_match = m.minimizers == o.half_dynkin;
      o.norm_match = m.norm_squared == o.expected_norm;
      for (const auto& h : o.half_dynkin) o.norm_match = o.norm_match && norm_squared(rs, h) == o.expected_norm;
      o.certificates_ok = std::all_of(m.regions.begin(), m.regions.end(),
                                      [](const RegionCertificate& rc) { return rc.certificate_ok; });
    }
    rep.timings["minimize"] = seconds_since(t0);
  }

  rep.zero_orbit_ok = false;
  for (std::size_t k = 0; k < data.regions.size(); ++k) {
    if (!is_zero_class(data.regions[k].orbit_class)) continue;
    const auto& idx = data.regions[k].ideal_indices;
    bool ok = idx.size() == 1 && data.ideals[idx[0]].size() == 0;
    if (config.checks.theorem) {
      const auto& m = rep.orbits[k].minimum;
      ok = ok && m.minimizers.size() == 1 && m.minimizers[0].coords.is_zero();
    }
    rep.zero_orbit_ok = ok;
  }

  t0 = std::chrono::steady_clock::now();
  parallel_for(data.regions.size(), config.jobs, [&](std::size_t k) {
    auto& o = rep.orbits[k];
    for (std::size_t di = 0; di < o.orbit_class.diagrams.size(); ++di) {
      const auto& d = o.orbit_class.diagrams[di];
      if (config.checks.prop31) o.prop31.push_back(verify_prop_half_in_region(rs, data, d));
      if (config.checks.corollary)
        o.corollary.push_back(verify_corollary(rs, d, derive_seed(config.seed, kCorollaryTag + k, di),
                                               config.corollary_budget, config.coeff_range));
      if (config.checks.propd_weak) {
        PropertyDOptions opt;
        opt.mode = PropertyDMode::kWeak;
        opt.seed = derive_seed(config.seed, kWeakTag + k, di);
        opt.samples_per_witness = config.propd_samples;
        opt.coeff_range = config.coeff_range;
        opt.weyl_ceiling = config.weyl_ceiling;
        opt.preferred = d;
        opt.trials = config.trials;
        const Ideal di_ideal = dynkin_ideal(rs, d);
        const int idx = find_ideal(data.ideals, di_ideal);
        if (idx >= 0) opt.associated = data.ideal_orbits[idx].orbit;
        auto result = verify_property_d(rs, di_ideal, opt);
        for (const auto& cert : result.certificates) o.supp_region.push_back(verify_supp_region(rs, cert));
        o.propd_weak.push_back(std::move(result));
      }
    }
  });
  rep.timings["side_checks"] = seconds_since(t0);

  if (config.checks.propd_strong) {
    t0 = std::chrono::steady_clock::now();
    rep.propd_strong.resize(data.ideals.size());
    parallel_for(data.ideals.size(), config.jobs, [&](std::size_t i) {
      PropertyDOptions opt;
      opt.mode = PropertyDMode::kStrong;
      opt.seed = derive_seed(config.seed, kStrongTag + i);
      opt.samples_per_witness = config.propd_samples;
      opt.coeff_range = config.coeff_range;
      opt.weyl_ceiling = config.weyl_ceiling;
      opt.trials = config.trials;
      rep.propd_strong[i].ideal_index = static_cast<int>(i);
      rep.propd_strong[i].result = verify_property_d(rs, data.ideals[i], opt);
    });
    rep.timings["propd_strong"] = seconds_since(t0);
  }
  return rep;
}

}  // namespace dynkin
