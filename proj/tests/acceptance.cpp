// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   acceptance [--seed N] [--jobs N] [--stretch]
//
// --stretch adds F4 to the exact-verification list.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <sstream>

#include "dynkin/report.hpp"
#include "dynkin/verify.hpp"
#include "oracles.hpp"

using namespace dynkin;

namespace {

struct Line {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Line> g_lines;

void record(int id, bool pass, const std::string& detail) {
  g_lines.push_back({id, pass, detail});
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

ChamberPoint pt(std::initializer_list<Rat> v) { return ChamberPoint(RatVec(v)); }

bool has(const std::vector<ChamberPoint>& set, const ChamberPoint& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  int jobs = 0;
  bool stretch = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::stoull(argv[++i]);
    else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::stoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--stretch")) stretch = true;
    else {
      std::cerr << "usage: acceptance [--seed N] [--jobs N] [--stretch]\n";
      return 2;
    }
  }

  std::vector<std::string> types = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};
  if (stretch) types.push_back("F4");

  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.jobs = jobs;
  cfg.checks = Checks::parse("theorem,prop31,corollary,propd-weak");

  const auto t0 = std::chrono::steady_clock::now();
  std::map<std::string, TheoremReport> reports;
  for (const auto& t : types) {
    auto c = cfg;
    if (t == "A2" || t == "A3") c.checks.propd_strong = true;
    const auto start = std::chrono::steady_clock::now();
    reports.emplace(t, verify_theorem(RootSystemSpec::parse(t), c));
    std::cerr << "[run] " << t << " "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << "s\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // 1. Exact half-Dynkin identity for every realised orbit class.
  {
    bool ok = true;
    std::ostringstream why;
    int classes = 0;
    for (const auto& [t, rep] : reports) {
      classes += static_cast<int>(rep.orbits.size());
      if (!rep.theorem_passed()) {
        ok = false;
        why << " " << t << " mismatch";
      }
      if (rep.inconclusive()) {
        ok = false;
        why << " " << t << " non-converged";
      }
    }
    std::ostringstream d;
    d << types.size() << " types, " << classes << " orbit classes, " << total << "s" << why.str();
    record(1, ok, d.str());
  }

  // 2. Golden membership facts for B2 and G2.
  {
    const auto b2 = reports.at("B2").minimum_set();
    const auto g2 = reports.at("G2").minimum_set();
    const Rat h = make_rat(1, 2), third = make_rat(1, 3);
    const bool ok = has(b2, pt({0, 0})) && has(b2, pt({0, h})) && has(b2, pt({1, 1})) && !has(b2, pt({1, h})) &&
                    has(g2, pt({0, 0})) && has(g2, pt({h, 0})) && has(g2, pt({1, 1})) && !has(g2, pt({h, h})) &&
                    !has(g2, pt({1, third}));
    std::ostringstream d;
    d << "B2 set {";
    for (const auto& p : b2) d << " " << to_string(p.coords);
    d << " }, G2 set {";
    for (const auto& p : g2) d << " " << to_string(p.coords);
    d << " }";
    record(2, ok, d.str());
  }

  // 3. Ideal counts against W-Catalan numbers and, for rank <= 3, brute force.
  {
    const std::map<std::string, std::uint64_t> expected = {{"A1", 2},  {"A2", 5},  {"A3", 14}, {"A4", 42}, {"B2", 6},
                                                           {"B3", 20}, {"C3", 20}, {"D4", 50}, {"G2", 8},  {"F4", 105}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& [t, rep] : reports) {
      const auto rs = build_root_system(rep.spec);
      bool good = static_cast<std::uint64_t>(rep.ideal_count) == expected.at(t) && rep.catalan == expected.at(t);
      if (rs.rank() <= 3) good = good && oracle::brute_force_ideals(rs).size() == expected.at(t);
      ok = ok && good;
      d << t << "=" << rep.ideal_count << " ";
    }
    record(3, ok, d.str());
  }

  // 4. Half the Dynkin element lies in its own N-region.
  {
    bool ok = true;
    int n = 0;
    for (const auto& [t, rep] : reports)
      for (const auto& o : rep.orbits)
        for (const auto& p : o.prop31) {
          ++n;
          ok = ok && p.passed;
        }
    record(4, ok, std::to_string(n) + " diagrams checked");
  }

  // 5. Smaller orbits met inside a Dynkin ideal have shorter Dynkin elements.
  {
    bool ok = true;
    int samples = 0, proper = 0, violations = 0;
    for (const auto& [t, rep] : reports)
      for (const auto& o : rep.orbits)
        for (const auto& c : o.corollary) {
          const bool empty_ideal = std::all_of(c.diagram.marks.begin(), c.diagram.marks.end(), [](int m) { return m == 0; });
          if (!empty_ideal && c.samples < 64) ok = false;
          samples += c.samples;
          proper += c.proper_suborbits;
          violations += c.violations;
        }
    ok = ok && violations == 0;
    record(5, ok,
           std::to_string(samples) + " samples, " + std::to_string(proper) + " proper sub-orbit hits, " +
               std::to_string(violations) + " violations");
  }

  // 6. Weak certificates on Dynkin ideals with w = identity; strong on A2, A3.
  {
    bool ok = true;
    int weak = 0, strong = 0;
    for (const auto& [t, rep] : reports) {
      for (const auto& o : rep.orbits) {
        for (const auto& r : o.propd_weak) {
          ok = ok && r.complete() && !r.certificates.empty();
          for (const auto& c : r.certificates) {
            ok = ok && c.relations_ok && c.weyl_word.empty();
            ++weak;
          }
        }
        for (const auto& s : o.supp_region) ok = ok && s.passed;
      }
      for (const auto& s : rep.propd_strong) {
        ok = ok && s.result.complete();
        for (const auto& c : s.result.certificates) {
          ok = ok && c.relations_ok;
          ++strong;
        }
      }
    }
    const bool strong_ran = !reports.at("A2").propd_strong.empty() && !reports.at("A3").propd_strong.empty();
    record(6, ok && strong_ran,
           std::to_string(weak) + " weak certificates, " + std::to_string(strong) + " strong certificates");
  }

  // 7. Exact QP against the brute-force oracle, with Gram rescaling.
  {
    SplitMix64 rng(derive_seed(seed, 7));
    bool ok = true;
    int feasible = 0;
    for (int t = 0; t < 500; ++t) {
      const auto p = oracle::random_polyhedron(rng);
      const auto g = oracle::random_spd(rng, p.dim);
      const auto expect = oracle::brute_force_min_norm(p, g);
      if (!expect) {
        const auto f = feasible_point(p);
        ok = ok && !f.feasible && verify_farkas(p, f.farkas);
        continue;
      }
      ++feasible;
      const auto c = min_norm_point(p, g);
      ok = ok && c.minimizer == *expect && verify_certificate(p, g, c).passed;
      for (int s = 0; s < 3; ++s) {
        const Rat k = oracle::random_positive_rat(rng);
        const auto scaled = min_norm_point(p, k * g);
        ok = ok && scaled.minimizer == c.minimizer && verify_certificate(p, k * g, scaled).passed;
      }
    }
    record(7, ok, "500 polyhedra, " + std::to_string(feasible) + " feasible");
  }

  // 8. Jacobi identity on every constructed root system.
  {
    bool ok = true;
    for (const auto& [t, rep] : reports) ok = ok && rep.jacobi_ok;
    record(8, ok, std::to_string(reports.size()) + " root systems");
  }

  // 9. Byte-identical canonical reports across runs and thread counts.
  {
    bool ok = true;
    for (const char* t : {"A3", "B3"}) {
      auto c = cfg;
      c.checks = Checks::parse("all");
      const auto spec = RootSystemSpec::parse(t);
      const auto rs = build_root_system(spec);
      c.jobs = 1;
      const auto one = canonical_dump(theorem_report_json(rs, verify_theorem(spec, c)));
      c.jobs = 4;
      const auto four = canonical_dump(theorem_report_json(rs, verify_theorem(spec, c)));
      const auto again = canonical_dump(theorem_report_json(rs, verify_theorem(spec, c)));
      ok = ok && one == four && four == again;
    }
    record(9, ok, "A3, B3 reports at 1 and 4 threads");
  }

  const bool all = std::all_of(g_lines.begin(), g_lines.end(), [](const Line& l) { return l.pass; });
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
