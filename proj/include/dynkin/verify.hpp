#pragma once

// End-to-end checks of the half-Dynkin characterisation of minimum-norm
// points of N-regions.
//
// Every ideal is assigned the orbit class dense in it; ideals with the same
// class form an N-region. Each closed sign-type region is minimised exactly,
// and the N-region minimum is compared with one half of the Dynkin element
// as an exact rational identity. Side checks: half the Dynkin element lies
// in its own N-region, Dynkin elements of smaller orbits met inside a
// Dynkin ideal are strictly shorter, and neutral elements can be found in
// the Borel (weak and strong searches).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynkin/liealg.hpp"
#include "dynkin/minnorm.hpp"
#include "dynkin/rootsys.hpp"
#include "dynkin/signtypes.hpp"

namespace dynkin {

struct Checks {
  bool theorem = true;
  bool prop31 = true;
  bool corollary = false;
  bool propd_weak = false;
  bool propd_strong = false;

  /// Comma-separated names: theorem, prop31, corollary, propd-weak, propd-strong.
  static Checks parse(const std::string& list);
  std::string to_string() const;
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int trials = 8;
  std::uint64_t coeff_range = 1'000'000;
  std::uint64_t weyl_ceiling = kDefaultWeylCeiling;
  int jobs = 0;  // 0 = all hardware threads
  int corollary_budget = 64;
  int propd_samples = 16;
  Checks checks;
};

struct NRegion {
  AmbiguityClass orbit_class;
  int orbit_dimension = 0;
  std::vector<int> ideal_indices;  // into the enumerate_ideals list
  bool converged = true;
};

struct NRegionData {
  std::vector<Ideal> ideals;
  std::vector<OrbitResult> ideal_orbits;  // parallel to ideals
  std::vector<NRegion> regions;           // ascending orbit dimension, then class
};

/// Groups ideals by their associated orbit class. Ideal i samples with
/// stream seed derive_seed(seed, i).
NRegionData build_nregions(const RootSystem& rs, std::vector<Ideal> ideals, const VerifyConfig& config);

struct RegionCertificate {
  int ideal_index = -1;
  Polyhedron polyhedron;
  MinNormCertificate certificate;
  bool certificate_ok = false;
};

struct NRegionMinimum {
  Rat norm_squared;
  std::vector<ChamberPoint> minimizers;  // distinct points attaining the minimum, sorted
  std::vector<RegionCertificate> regions;
};

NRegionMinimum min_point_of_nregion(const RootSystem& rs, const NRegionData& data, const NRegion& region, int jobs = 1);

struct Prop31Result {
  WeightedDynkinDiagram diagram;
  bool passed = false;
  bool plus_ideal_is_dynkin_ideal = false;
  bool orbit_matches = false;
};

/// The sign type of h/2 has plus-set the Dynkin ideal, whose orbit class contains the diagram.
Prop31Result verify_prop_half_in_region(const RootSystem& rs, const NRegionData& data, const WeightedDynkinDiagram& d);

struct CorollaryResult {
  WeightedDynkinDiagram diagram;
  int samples = 0;
  int proper_suborbits = 0;
  int violations = 0;
  std::vector<AmbiguityClass> suborbits_seen;
  bool passed() const { return violations == 0; }
};

/// Samples elements on sub-supports of the Dynkin ideal of d (all
/// single-generator deletions first, then random subsets) and checks that
/// every other orbit met has a strictly shorter Dynkin element.
CorollaryResult verify_corollary(const RootSystem& rs, const WeightedDynkinDiagram& d, std::uint64_t seed,
                                 int budget = 64, std::uint64_t coeff_range = 1'000'000);

enum class PropertyDMode { kWeak, kStrong };

struct PropertyDCertificate {
  AmbiguityClass target;
  WeightedDynkinDiagram diagram;  // the Dynkin element that was conjugated
  std::vector<int> weyl_word;     // h = w(diagram), w = s_{word[0]} ... s_{word[k-1]}
  std::vector<int> h_coweight;    // alpha_i(h)
  LieElement e, h, f;
  bool relations_ok = false;
};

struct PropertyDResult {
  std::vector<PropertyDCertificate> certificates;
  std::vector<AmbiguityClass> not_found;  // inconclusive targets
  std::vector<AmbiguityClass> targets;
  int witnesses_tried = 0;
  bool complete() const { return not_found.empty(); }
};

struct PropertyDOptions {
  PropertyDMode mode = PropertyDMode::kWeak;
  std::uint64_t seed = 1;
  int samples_per_witness = 16;
  std::uint64_t coeff_range = 1'000'000;
  std::uint64_t weyl_ceiling = kDefaultWeylCeiling;
  /// Tried first among the target's diagrams (weak mode on a Dynkin ideal).
  std::optional<WeightedDynkinDiagram> preferred;
  /// Weak-mode target; computed from the ideal when absent.
  std::optional<AmbiguityClass> associated;
  int trials = 8;
};

/// Orbit classes met by generic elements on sub-supports of the ideal (all
/// subsets up to 2^10, otherwise 1024 seeded random subsets).
std::vector<AmbiguityClass> orbits_meeting_ideal(const RootSystem& rs, const Ideal& ideal, std::uint64_t seed,
                                                 std::uint64_t coeff_range = 1'000'000);

PropertyDResult verify_property_d(const RootSystem& rs, const Ideal& ideal, const PropertyDOptions& options);

/// Re-checks e in the ideal, [h,e] = 2e, [e,f] = h, [h,f] = -2f and that h is
/// the stated Weyl image of the diagram's Dynkin element.
bool check_property_d_certificate(const RootSystem& rs, const Ideal& ideal, const PropertyDCertificate& cert);

struct SuppRegionResult {
  bool passed = false;
  RatVec minimizer;
  bool conjugate_to_dynkin = false;
  bool equals_half_h = false;
};

/// Minimises over R_e = {alpha(v) >= 1 for alpha in supp(e)} and compares with h/2.
SuppRegionResult verify_supp_region(const RootSystem& rs, const PropertyDCertificate& cert);

struct OrbitReport {
  AmbiguityClass orbit_class;
  int orbit_dimension = 0;
  std::vector<int> ideal_indices;
  std::vector<ChamberPoint> half_dynkin;  // one per diagram in the class
  Rat expected_norm;                      // norm of h/2 from the diagram alone
  NRegionMinimum minimum;
  bool exact_match = false;
  bool norm_match = false;
  bool certificates_ok = false;
  bool converged = true;
  std::vector<Prop31Result> prop31;
  std::vector<CorollaryResult> corollary;
  std::vector<PropertyDResult> propd_weak;  // one per Dynkin ideal in the class
  std::vector<SuppRegionResult> supp_region;
};

struct StrongPropertyD {
  int ideal_index = -1;
  PropertyDResult result;
};

struct TheoremReport {
  static constexpr const char* kSchemaVersion = "dynkin-minnorm-report/1";

  RootSystemSpec spec;
  VerifyConfig config;
  int ideal_count = 0;
  std::uint64_t catalan = 0;
  bool jacobi_ok = false;
  bool partition_ok = false;
  bool zero_orbit_ok = false;
  std::vector<std::vector<int>> ideal_generators;  // per ideal, for the report
  std::vector<AmbiguityClass> ideal_orbits;
  std::vector<OrbitReport> orbits;
  std::vector<StrongPropertyD> propd_strong;
  std::map<std::string, double> timings;  // seconds per phase; not canonical

  bool theorem_passed() const;
  bool all_passed() const;
  bool inconclusive() const;
  /// Sorted, distinct computed N-region minima over all realised classes.
  std::vector<ChamberPoint> minimum_set() const;
};

TheoremReport verify_theorem(const RootSystemSpec& spec, const VerifyConfig& config);

}  // namespace dynkin
