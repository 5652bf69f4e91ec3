// Command-line front end: roots | ideals | verify | minpoint | propd.
//
// Exit status: 0 all checks pass, 1 mismatch, 2 usage or configuration
// error, 3 inconclusive (sampling did not converge or a property-D search
// ran out of budget).

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dynkin/liealg.hpp"
#include "dynkin/minnorm.hpp"
#include "dynkin/random.hpp"
#include "dynkin/report.hpp"
#include "dynkin/rootsys.hpp"
#include "dynkin/signtypes.hpp"
#include "dynkin/verify.hpp"

using namespace dynkin;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct RunConfig {
  std::vector<std::string> type_words;
  std::uint64_t seed = 1;
  int trials = 8;
  std::uint64_t coeff_range = 1'000'000;
  std::uint64_t weyl_ceiling = kDefaultWeylCeiling;
  std::string format = "json";
  std::string out;
  int jobs = 0;
  std::string checks = "theorem,prop31";
  bool timings = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootSystemSpec spec_of(const RunConfig& cfg) {
  std::string joined;
  for (const auto& w : cfg.type_words) joined += w;
  if (joined.empty()) throw UsageError("a root system type is required, e.g. \"A 2\" or \"A2\"");
  try {
    auto spec = RootSystemSpec::parse(joined);
    spec.validate();
    return spec;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

VerifyConfig verify_config(const RunConfig& cfg) {
  VerifyConfig v;
  v.seed = cfg.seed;
  v.trials = cfg.trials;
  v.coeff_range = cfg.coeff_range;
  v.weyl_ceiling = cfg.weyl_ceiling;
  v.jobs = cfg.jobs;
  try {
    v.checks = Checks::parse(cfg.checks);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return v;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + cfg.out);
  f << text;
}

void log_phase(const std::string& name, double seconds) {
  std::cerr << "[phase] " << name << ' ' << seconds << "s\n";
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
  }
  return out;
}

int cmd_roots(const RunConfig& cfg) {
  const auto rs = build_root_system(spec_of(cfg));
  const auto fmt = parse_format(cfg.format);
  if (fmt == OutputFormat::kJson) {
    emit(cfg, canonical_dump(root_system_json(rs)));
  } else {
    std::ostringstream out;
    if (fmt == OutputFormat::kCsv) out << "index,coords,height,long\n";
    else out << "| index | coords | height | long |\n|---|---|---|---|\n";
    for (int i = 0; i < rs.num_positive(); ++i) {
      const auto& r = rs.positive_root(i);
      std::string coords;
      for (std::size_t k = 0; k < r.coords.size(); ++k) coords += (k ? " " : "") + std::to_string(r.coords[k]);
      if (fmt == OutputFormat::kCsv) out << i << ",\"" << coords << "\"," << r.height << ',' << r.is_long << '\n';
      else out << "| " << i << " | " << coords << " | " << r.height << " | " << r.is_long << " |\n";
    }
    emit(cfg, out.str());
  }
  return kExitPass;
}

int cmd_ideals(const RunConfig& cfg) {
  const auto rs = build_root_system(spec_of(cfg));
  const auto ideals = enumerate_ideals(rs);
  const auto fmt = parse_format(cfg.format);
  if (fmt == OutputFormat::kJson) {
    emit(cfg, canonical_dump(ideals_json(rs, ideals)));
  } else {
    std::ostringstream out;
    if (fmt == OutputFormat::kCsv) out << "index,size,generators\n";
    else out << "| index | size | generators |\n|---|---|---|\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      std::string gens;
      for (int g : ideals[i].generators) gens += (gens.empty() ? "" : " ") + to_string(RatVec::from_ints(rs.root_coords(g)));
      if (fmt == OutputFormat::kCsv) out << i << ',' << ideals[i].size() << ",\"" << gens << "\"\n";
      else out << "| " << i << " | " << ideals[i].size() << " | " << gens << " |\n";
    }
    emit(cfg, out.str());
  }
  return ideals.size() == catalan_number(rs.spec()) ? kExitPass : kExitMismatch;
}

int cmd_verify(const RunConfig& cfg) {
  const auto spec = spec_of(cfg);
  const auto vcfg = verify_config(cfg);
  const auto fmt = parse_format(cfg.format);
  const auto rep = verify_theorem(spec, vcfg);
  for (const auto& [name, s] : rep.timings) log_phase(name, s);
  const auto rs = build_root_system(spec);
  switch (fmt) {
    case OutputFormat::kJson: emit(cfg, canonical_dump(theorem_report_json(rs, rep, cfg.timings))); break;
    case OutputFormat::kCsv: emit(cfg, render_csv(rep)); break;
    case OutputFormat::kMarkdown: emit(cfg, render_markdown(rep)); break;
  }
  std::cerr << spec.label() << ": " << rep.orbits.size() << " orbit classes, "
            << (rep.all_passed() ? (rep.inconclusive() ? "inconclusive" : "pass") : "FAIL") << '\n';
  if (!rep.all_passed()) return kExitMismatch;
  return rep.inconclusive() ? kExitInconclusive : kExitPass;
}

struct MinpointArgs {
  int ideal = -1;
  std::string generators;
  std::string orbit;
  bool debug_infeasible = false;
};

// Minimum over the closed region of one ideal, an N-region, or a
// deliberately empty polyhedron.
int cmd_minpoint(const RunConfig& cfg, const MinpointArgs& args) {
  const auto spec = spec_of(cfg);
  const auto rs = build_root_system(spec);
  const auto& gram = rs.gram_coweight();

  if (args.debug_infeasible) {
    // alpha_1(x) >= 1 and alpha_1(x) <= 0.
    Polyhedron p;
    p.dim = rs.rank();
    std::vector<int> n(rs.rank(), 0);
    n[0] = 1;
    p.constraints.push_back({n, Rat(1), Sense::kGreaterEq});
    p.constraints.push_back({n, Rat(0), Sense::kLessEq});
    try {
      min_norm_point(p, gram);
    } catch (const InfeasiblePolyhedron& e) {
      emit(cfg, canonical_dump({{"polyhedron", to_json(p)},
                                {"feasible", false},
                                {"farkas", to_json(e.farkas())},
                                {"farkas_ok", verify_farkas(p, e.farkas())}}));
      return verify_farkas(p, e.farkas()) ? kExitPass : kExitMismatch;
    }
    return kExitMismatch;
  }

  const auto ideals = enumerate_ideals(rs);
  if (!args.orbit.empty()) {
    const WeightedDynkinDiagram target{parse_ints(args.orbit)};
    if (static_cast<int>(target.marks.size()) != rs.rank()) throw UsageError("orbit marks must have rank entries");
    const auto vcfg = verify_config(cfg);
    const auto data = build_nregions(rs, ideals, vcfg);
    for (const auto& r : data.regions) {
      if (!r.orbit_class.contains(target)) continue;
      const auto m = min_point_of_nregion(rs, data, r, cfg.jobs);
      Json regions = Json::array();
      bool ok = true;
      for (const auto& rc : m.regions) {
        ok = ok && rc.certificate_ok;
        regions.push_back({{"ideal_index", rc.ideal_index},
                           {"polyhedron", to_json(rc.polyhedron)},
                           {"certificate", to_json(rc.certificate)},
                           {"certificate_ok", rc.certificate_ok}});
      }
      Json mins = Json::array();
      for (const auto& p : m.minimizers) mins.push_back(to_json(p.coords));
      emit(cfg, canonical_dump({{"orbit_class", to_json(r.orbit_class)},
                                {"min_points", mins},
                                {"min_norm_squared", to_json(m.norm_squared)},
                                {"regions", regions}}));
      return ok ? kExitPass : kExitMismatch;
    }
    throw UsageError("no ideal has orbit " + to_string(target));
  }

  Ideal ideal;
  if (args.ideal >= 0) {
    if (args.ideal >= static_cast<int>(ideals.size())) throw UsageError("ideal index out of range");
    ideal = ideals[args.ideal];
  } else if (!args.generators.empty()) {
    std::vector<int> gens;
    std::stringstream in(args.generators);
    std::string item;
    while (std::getline(in, item, ';')) {
      const int idx = rs.find_root(parse_ints(item));
      if (idx < 0 || idx >= rs.num_positive()) throw UsageError("not a positive root: " + item);
      gens.push_back(idx);
    }
    ideal = ideal_generated_by(rs, gens);
  } else {
    throw UsageError("minpoint needs --ideal, --generators, --orbit or --debug-infeasible");
  }
  const Polyhedron p = closure_polyhedron(rs, sign_type_of_ideal(ideal));
  const auto cert = min_norm_point(p, gram);
  const auto check = verify_certificate(p, gram, cert);
  emit(cfg, canonical_dump({{"ideal_generators", [&] {
                               Json g = Json::array();
                               for (int i : ideal.generators) g.push_back(rs.root_coords(i));
                               return g;
                             }()},
                            {"polyhedron", to_json(p)},
                            {"certificate", to_json(cert)},
                            {"certificate_ok", check.passed}}));
  return check.passed ? kExitPass : kExitMismatch;
}

struct PropdArgs {
  std::string mode = "weak";
  int ideal = -1;
};

int cmd_propd(const RunConfig& cfg, const PropdArgs& args) {
  const auto spec = spec_of(cfg);
  const auto rs = build_root_system(spec);
  const auto ideals = enumerate_ideals(rs);
  if (args.mode != "weak" && args.mode != "strong") throw UsageError("--mode must be weak or strong");
  if (args.ideal >= static_cast<int>(ideals.size())) throw UsageError("ideal index out of range");

  std::vector<int> which;
  if (args.ideal >= 0) which.push_back(args.ideal);
  else
    for (std::size_t i = 0; i < ideals.size(); ++i) which.push_back(static_cast<int>(i));

  bool ok = true, complete = true;
  Json results = Json::array();
  for (int i : which) {
    PropertyDOptions opt;
    opt.mode = args.mode == "weak" ? PropertyDMode::kWeak : PropertyDMode::kStrong;
    opt.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    opt.coeff_range = cfg.coeff_range;
    opt.weyl_ceiling = cfg.weyl_ceiling;
    opt.trials = cfg.trials;
    const auto r = verify_property_d(rs, ideals[i], opt);
    for (const auto& c : r.certificates) ok = ok && c.relations_ok;
    complete = complete && r.complete();
    Json entry = property_d_json(rs, r);
    entry["ideal_index"] = i;
    results.push_back(entry);
  }
  emit(cfg, canonical_dump({{"schema_version", TheoremReport::kSchemaVersion},
                            {"type", spec.label()},
                            {"mode", args.mode},
                            {"seed", cfg.seed},
                            {"results", results}}));
  if (!ok) return kExitMismatch;
  return complete ? kExitPass : kExitInconclusive;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("type", cfg.type_words, "Root system, e.g. \"A 2\" or A2")->required()->expected(1, 2);
  cmd->add_option("--seed", cfg.seed, "Seed for every randomised choice");
  cmd->add_option("--trials", cfg.trials, "Generic samples per ideal")->check(CLI::PositiveNumber);
  cmd->add_option("--coeff-range", cfg.coeff_range, "Sample coefficients are drawn from [1, N]")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--weyl-ceiling", cfg.weyl_ceiling, "Refuse Weyl enumeration beyond this order")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "json | csv | markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  cmd->add_option("--out", cfg.out, "Write output here instead of stdout");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-norm points of N-regions and half Dynkin elements"};
  app.require_subcommand(1);
  RunConfig cfg;
  MinpointArgs mp;
  PropdArgs pd;

  auto* roots = app.add_subcommand("roots", "Dump the root system");
  add_common(roots, cfg);
  auto* ideals = app.add_subcommand("ideals", "List the B-stable ideals");
  add_common(ideals, cfg);
  auto* verify = app.add_subcommand("verify", "Check the half-Dynkin characterisation of N-region minima");
  add_common(verify, cfg);
  verify->add_option("--checks", cfg.checks, "theorem,prop31,corollary,propd-weak,propd-strong (or all)");
  verify->add_flag("--timings", cfg.timings, "Include wall-clock timings in the JSON report");
  auto* minpoint = app.add_subcommand("minpoint", "Minimum-norm point with its KKT certificate");
  add_common(minpoint, cfg);
  minpoint->add_option("--ideal", mp.ideal, "Ideal index as listed by `ideals`");
  minpoint->add_option("--generators", mp.generators, "Generating roots, e.g. \"1,1\" or \"1,0;0,1\"");
  minpoint->add_option("--orbit", mp.orbit, "Weighted Dynkin diagram of an N-region, e.g. \"1,1\"");
  minpoint->add_flag("--debug-infeasible", mp.debug_infeasible, "Solve an empty polyhedron and print the Farkas certificate");
  auto* propd = app.add_subcommand("propd", "Search for property-D certificates");
  add_common(propd, cfg);
  propd->add_option("--mode", pd.mode, "weak | strong")->check(CLI::IsMember({"weak", "strong"}));
  propd->add_option("--ideal", pd.ideal, "Ideal index (default: all ideals)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*roots) return cmd_roots(cfg);
    if (*ideals) return cmd_ideals(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*minpoint) return cmd_minpoint(cfg, mp);
    if (*propd) return cmd_propd(cfg, pd);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const WeylCeilingExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
