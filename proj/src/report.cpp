#include "dynkin/report.hpp"

#include <sstream>
#include <stdexcept>

#include "dynkin/random.hpp"

namespace dynkin {

namespace {

Json int_list(const std::vector<int>& v) { return Json(v); }

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << std::uppercase << v;
  return out.str();
}

Json roots_json(const RootSystem& rs, const std::vector<int>& indices) {
  Json out = Json::array();
  for (int i : indices) out.push_back(rs.root_coords(i));
  return out;
}

std::string points_text(const std::vector<ChamberPoint>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? " " : "") + to_string(pts[i].coords);
  return out;
}

bool prop31_ok(const OrbitReport& o) {
  for (const auto& p : o.prop31)
    if (!p.passed) return false;
  return true;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "markdown" || name == "md") return OutputFormat::kMarkdown;
  throw std::invalid_argument("unknown format: " + name);
}

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const WeightedDynkinDiagram& d) { return int_list(d.marks); }

Json to_json(const AmbiguityClass& c) {
  Json out = Json::array();
  for (const auto& d : c.diagrams) out.push_back(to_json(d));
  return out;
}

Json to_json(const Polyhedron& p) {
  Json cons = Json::array();
  for (const auto& c : p.constraints) {
    cons.push_back({{"normal", c.normal},
                    {"bound", to_json(c.bound)},
                    {"sense", c.sense == Sense::kGreaterEq ? ">=" : "<="}});
  }
  return {{"dim", p.dim}, {"constraints", cons}};
}

Json to_json(const MinNormCertificate& c) {
  return {{"minimizer", to_json(c.minimizer)},
          {"active_set", c.active_set},
          {"multipliers", to_json(c.multipliers)},
          {"norm_squared", to_json(c.norm_squared)},
          {"iterations", c.iterations}};
}

Json to_json(const RootSystem& rs, const LieElement& x) {
  Json roots = Json::array();
  for (const auto& [idx, c] : x.root_part()) roots.push_back({{"root", rs.root_coords(idx)}, {"coeff", to_json(c)}});
  return {{"root_part", roots}, {"cartan_part", to_json(x.cartan_part())}};
}

Polyhedron polyhedron_from_json(const Json& j) {
  Polyhedron p;
  p.dim = j.at("dim").get<int>();
  for (const auto& c : j.at("constraints")) {
    Constraint con;
    con.normal = c.at("normal").get<std::vector<int>>();
    con.bound = parse_rat(c.at("bound").get<std::string>());
    const auto sense = c.at("sense").get<std::string>();
    if (sense != ">=" && sense != "<=") throw std::invalid_argument("bad constraint sense: " + sense);
    con.sense = sense == ">=" ? Sense::kGreaterEq : Sense::kLessEq;
    if (static_cast<int>(con.normal.size()) != p.dim) throw std::invalid_argument("constraint has the wrong dimension");
    p.constraints.push_back(std::move(con));
  }
  return p;
}

namespace {
RatVec rat_vec_from_json(const Json& j) {
  RatVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = parse_rat(j[i].get<std::string>());
  return v;
}
}  // namespace

MinNormCertificate certificate_from_json(const Json& j) {
  MinNormCertificate c;
  c.minimizer = rat_vec_from_json(j.at("minimizer"));
  c.active_set = j.at("active_set").get<std::vector<int>>();
  c.multipliers = rat_vec_from_json(j.at("multipliers"));
  c.norm_squared = parse_rat(j.at("norm_squared").get<std::string>());
  c.iterations = j.at("iterations").get<int>();
  return c;
}

Json root_system_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (int i = 0; i < rs.num_positive(); ++i) {
    const auto& r = rs.positive_root(i);
    roots.push_back({{"index", i}, {"coords", r.coords}, {"height", r.height}, {"long", r.is_long}});
  }
  Json gram = Json::array();
  for (std::size_t i = 0; i < rs.gram_coweight().rows(); ++i) gram.push_back(to_json(rs.gram_coweight().row(i)));
  Json constants = Json::array();
  const int roots_total = 2 * rs.num_positive();
  for (int a = 0; a < roots_total; ++a)
    for (int b = 0; b < roots_total; ++b)
      if (rs.root_sum(a, b) >= 0)
        constants.push_back({{"a", rs.root_coords(a)}, {"b", rs.root_coords(b)}, {"n", rs.structure_constant(a, b)}});
  return {{"schema_version", TheoremReport::kSchemaVersion},
          {"type", rs.spec().label()},
          {"rank", rs.rank()},
          {"structure_constants", constants},
          {"dimension", rs.dim_algebra()},
          {"cartan_matrix", rs.cartan_matrix()},
          {"symmetrizers", rs.symmetrizers()},
          {"positive_root_count", rs.num_positive()},
          {"positive_roots", roots},
          {"highest_root", rs.root_coords(rs.highest_root_index())},
          {"coweight_gram", gram},
          {"exponents", exponents(rs.spec())},
          {"coxeter_number", coxeter_number(rs.spec())},
          {"weyl_group_order", weyl_group_order(rs.spec())},
          {"catalan_number", catalan_number(rs.spec())}};
}

Json ideals_json(const RootSystem& rs, const std::vector<Ideal>& ideals) {
  Json list = Json::array();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    list.push_back({{"index", i},
                    {"size", ideals[i].size()},
                    {"generators", roots_json(rs, ideals[i].generators)},
                    {"roots", roots_json(rs, ideals[i].member_indices())}});
  }
  return {{"schema_version", TheoremReport::kSchemaVersion},
          {"type", rs.spec().label()},
          {"count", ideals.size()},
          {"catalan_number", catalan_number(rs.spec())},
          {"ideals", list}};
}

Json property_d_json(const RootSystem& rs, const PropertyDResult& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"target", to_json(c.target)},
                     {"diagram", to_json(c.diagram)},
                     {"weyl_word", c.weyl_word},
                     {"h_coweight", c.h_coweight},
                     {"e", to_json(rs, c.e)},
                     {"h", to_json(rs, c.h)},
                     {"f", to_json(rs, c.f)},
                     {"relations_ok", c.relations_ok}});
  }
  Json targets = Json::array();
  for (const auto& t : r.targets) targets.push_back(to_json(t));
  Json missing = Json::array();
  for (const auto& t : r.not_found) missing.push_back(to_json(t));
  return {{"targets", targets},
          {"certificates", certs},
          {"not_found", missing},
          {"witnesses_tried", r.witnesses_tried},
          {"complete", r.complete()}};
}

Json theorem_report_json(const RootSystem& rs, const TheoremReport& rep, bool with_timings) {
  const auto& cfg = rep.config;
  Json header = {{"type", rep.spec.label()},
                 {"family", std::string(1, rep.spec.family)},
                 {"rank", rep.spec.rank},
                 {"seed", cfg.seed},
                 {"trials", cfg.trials},
                 {"coeff_range", cfg.coeff_range},
                 {"weyl_ceiling", cfg.weyl_ceiling},
                 {"corollary_budget", cfg.corollary_budget},
                 {"propd_samples", cfg.propd_samples},
                 {"checks", cfg.checks.to_string()},
                 {"prng",
                  {{"generator", "splitmix64"},
                   {"gamma", hex(kSplitMixGamma)},
                   {"mul1", hex(kSplitMixMul1)},
                   {"mul2", hex(kSplitMixMul2)},
                   {"ideal_stream", "derive_seed(seed, ideal_index)"}}}};

  Json ideals = Json::array();
  for (std::size_t i = 0; i < rep.ideal_generators.size(); ++i) {
    ideals.push_back(
        {{"index", i}, {"generators", roots_json(rs, rep.ideal_generators[i])}, {"orbit", to_json(rep.ideal_orbits[i])}});
  }

  Json orbits = Json::array();
  for (const auto& o : rep.orbits) {
    Json regions = Json::array();
    for (const auto& rc : o.minimum.regions) {
      regions.push_back({{"ideal_index", rc.ideal_index},
                         {"polyhedron", to_json(rc.polyhedron)},
                         {"certificate", to_json(rc.certificate)},
                         {"certificate_ok", rc.certificate_ok}});
    }
    Json half = Json::array();
    for (const auto& p : o.half_dynkin) half.push_back(to_json(p.coords));
    Json mins = Json::array();
    for (const auto& p : o.minimum.minimizers) mins.push_back(to_json(p.coords));
    Json dynkin = Json::array();
    for (const auto& d : o.orbit_class.diagrams) dynkin.push_back(to_json(dynkin_point(d).coords));

    Json entry = {{"diagrams", to_json(o.orbit_class)},
                  {"dynkin_elements", dynkin},
                  {"half_dynkin_points", half},
                  {"orbit_dimension", o.orbit_dimension},
                  {"region_count", o.ideal_indices.size()},
                  {"ideal_indices", o.ideal_indices},
                  {"converged", o.converged}};
    if (cfg.checks.theorem) {
      entry["min_points"] = mins;
      entry["min_norm_squared"] = to_json(o.minimum.norm_squared);
      entry["expected_norm_squared"] = to_json(o.expected_norm);
      entry["exact_match"] = o.exact_match;
      entry["norm_match"] = o.norm_match;
      entry["certificates_ok"] = o.certificates_ok;
      entry["regions"] = regions;
    }
    if (cfg.checks.prop31) {
      Json p31 = Json::array();
      for (const auto& p : o.prop31)
        p31.push_back({{"diagram", to_json(p.diagram)},
                       {"passed", p.passed},
                       {"plus_ideal_is_dynkin_ideal", p.plus_ideal_is_dynkin_ideal},
                       {"orbit_matches", p.orbit_matches}});
      entry["prop31"] = p31;
    }
    if (cfg.checks.corollary) {
      Json cor = Json::array();
      for (const auto& c : o.corollary) {
        Json seen = Json::array();
        for (const auto& s : c.suborbits_seen) seen.push_back(to_json(s));
        cor.push_back({{"diagram", to_json(c.diagram)},
                       {"samples", c.samples},
                       {"proper_suborbit_samples", c.proper_suborbits},
                       {"violations", c.violations},
                       {"suborbits_seen", seen}});
      }
      entry["corollary"] = cor;
    }
    if (cfg.checks.propd_weak) {
      Json weak = Json::array();
      for (const auto& r : o.propd_weak) weak.push_back(property_d_json(rs, r));
      Json supp = Json::array();
      for (const auto& s : o.supp_region)
        supp.push_back({{"minimizer", to_json(s.minimizer)},
                        {"conjugate_to_dynkin", s.conjugate_to_dynkin},
                        {"equals_half_h", s.equals_half_h},
                        {"passed", s.passed}});
      entry["propd_weak"] = weak;
      entry["supp_region"] = supp;
    }
    orbits.push_back(entry);
  }

  Json out = {{"schema_version", TheoremReport::kSchemaVersion},
              {"config", header},
              {"ideal_count", rep.ideal_count},
              {"catalan_number", rep.catalan},
              {"orbit_class_count", rep.orbits.size()},
              {"jacobi_ok", rep.jacobi_ok},
              {"partition_ok", rep.partition_ok},
              {"zero_orbit_ok", rep.zero_orbit_ok},
              {"ideals", ideals},
              {"orbits", orbits},
              {"theorem_passed", rep.theorem_passed()},
              {"all_passed", rep.all_passed()},
              {"inconclusive", rep.inconclusive()}};
  if (cfg.checks.theorem) {
    Json set = Json::array();
    for (const auto& p : rep.minimum_set()) set.push_back(to_json(p.coords));
    out["min_point_set"] = set;
  }
  if (cfg.checks.propd_strong) {
    Json strong = Json::array();
    for (const auto& s : rep.propd_strong) {
      Json entry = property_d_json(rs, s.result);
      entry["ideal_index"] = s.ideal_index;
      strong.push_back(entry);
    }
    out["propd_strong"] = strong;
  }
  if (with_timings) out["timings_seconds"] = rep.timings;
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_csv(const TheoremReport& rep) {
  std::ostringstream out;
  out << "type,seed,diagrams,orbit_dimension,region_count,half_dynkin,min_points,min_norm_squared,exact_match,"
         "prop31\n";
  for (const auto& o : rep.orbits) {
    out << rep.spec.label() << ',' << rep.config.seed << ",\"" << to_string(o.orbit_class) << "\","
        << o.orbit_dimension << ',' << o.ideal_indices.size() << ",\"" << points_text(o.half_dynkin) << "\",\""
        << points_text(o.minimum.minimizers) << "\"," << to_string(o.minimum.norm_squared) << ','
        << (o.exact_match ? "true" : "false") << ',' << (prop31_ok(o) ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string render_markdown(const TheoremReport& rep) {
  std::ostringstream out;
  out << "## " << rep.spec.label() << " (seed " << rep.config.seed << ")\n\n";
  out << "ideals: " << rep.ideal_count << " (W-Catalan " << rep.catalan << "), orbit classes: " << rep.orbits.size()
      << ", result: " << (rep.all_passed() ? (rep.inconclusive() ? "inconclusive" : "pass") : "FAIL") << "\n\n";
  out << "| diagrams | dim | regions | half Dynkin | min point | norm^2 | match |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& o : rep.orbits) {
    out << "| " << to_string(o.orbit_class) << " | " << o.orbit_dimension << " | " << o.ideal_indices.size() << " | "
        << points_text(o.half_dynkin) << " | " << points_text(o.minimum.minimizers) << " | "
        << to_string(o.minimum.norm_squared) << " | " << (o.exact_match ? "yes" : "no") << " |\n";
  }
  return out.str();
}

}  // namespace dynkin
