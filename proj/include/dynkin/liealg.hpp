#pragma once

// Lie algebra computations over the Chevalley basis of a simple Lie algebra:
// brackets, adjoint matrices, generic elements of B-stable ideals,
// Jacobson-Morozov neutral elements, and weighted Dynkin diagrams.
//
// Nilpotent orbits are identified by their weighted Dynkin diagram. The
// diagram of a sampled element e is read off the ad-spectrum of a neutral
// element h' for e; a handful of diagrams (the outer-automorphism images in
// type D) share a spectrum, so the result is an AmbiguityClass.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynkin/exactlin.hpp"
#include "dynkin/rootsys.hpp"
#include "dynkin/signtypes.hpp"

namespace dynkin {

class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(int rank) : cartan_part_(rank) {}

  static LieElement zero(const RootSystem& rs) { return LieElement(rs.rank()); }
  static LieElement root_vector(const RootSystem& rs, int root_index, const Rat& coeff = 1);
  /// Cartan element with the given coefficients over the simple coroots.
  static LieElement cartan(const RatVec& coroot_coeffs);
  /// Cartan element whose simple-root pairings are the given coweight coordinates.
  static LieElement from_coweight(const RootSystem& rs, const RatVec& coweight);
  static LieElement from_vector(const RootSystem& rs, const RatVec& v);

  const std::map<int, Rat>& root_part() const { return root_part_; }
  const RatVec& cartan_part() const { return cartan_part_; }

  void add_root(int root_index, const Rat& coeff);
  void add_cartan(int simple, const Rat& coeff);

  bool is_zero() const;
  bool in_cartan() const { return root_part_.empty(); }
  /// Dense coordinates over the Chevalley basis.
  RatVec to_vector(const RootSystem& rs) const;
  /// Coweight coordinates alpha_i(h) of the Cartan part.
  RatVec cartan_coweight(const RootSystem& rs) const;
  /// Root indices with nonzero coefficient.
  std::vector<int> support() const;

  LieElement& operator+=(const LieElement& other);
  LieElement& operator*=(const Rat& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, LieElement b) { return a += (b *= Rat(-1)); }
  friend LieElement operator*(const Rat& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.root_part_ == b.root_part_ && a.cartan_part_ == b.cartan_part_;
  }

 private:
  std::map<int, Rat> root_part_;  // no zero coefficients
  RatVec cartan_part_;
};

std::string to_string(const RootSystem& rs, const LieElement& x);

struct WeightedDynkinDiagram {
  std::vector<int> marks;

  friend bool operator==(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;
  friend auto operator<=>(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;
};

std::string to_string(const WeightedDynkinDiagram& d);

/// The Dynkin element of a diagram as a chamber point (coordinates = marks).
ChamberPoint dynkin_point(const WeightedDynkinDiagram& d);
/// One half of the Dynkin element.
ChamberPoint half_dynkin_point(const WeightedDynkinDiagram& d);

/// Diagrams sharing one ad-spectrum, sorted ascending.
struct AmbiguityClass {
  std::vector<WeightedDynkinDiagram> diagrams;

  bool contains(const WeightedDynkinDiagram& d) const;
  const WeightedDynkinDiagram& representative() const { return diagrams.front(); }
  friend bool operator==(const AmbiguityClass&, const AmbiguityClass&) = default;
  friend auto operator<=>(const AmbiguityClass&, const AmbiguityClass&) = default;
};

std::string to_string(const AmbiguityClass& c);

/// Eigenvalue -> multiplicity.
using Spectrum = std::map<int, int>;

struct GradedPieces {
  std::map<int, std::vector<int>> roots_by_eigenvalue;  // root indices over all of Phi
  int cartan_multiplicity = 0;
};

LieElement bracket(const RootSystem& rs, const LieElement& x, const LieElement& y);

/// Column j is [x, b_j] over the Chevalley basis.
RatMat ad_matrix(const RootSystem& rs, const LieElement& x);

struct SamplingConfig {
  std::uint64_t seed = 1;
  int trials = 8;
  std::uint64_t coeff_range = 1'000'000;
};

/// sum over roots in `support` of c_alpha e_alpha with c_alpha uniform in
/// [1, coeff_range], drawn from the given stream seed.
LieElement sample_on_support(const RootSystem& rs, const std::vector<int>& support, std::uint64_t stream_seed,
                             std::uint64_t coeff_range);

/// `trials` samples on the ideal; the empty ideal yields the single sample 0.
std::vector<LieElement> sample_generic(const RootSystem& rs, const Ideal& ideal, std::uint64_t seed, int trials,
                                       std::uint64_t coeff_range = 1'000'000);

struct NeutralElement {
  LieElement h;
  bool zero_orbit = false;
};

/// h' in the image of ad(e) with [h', e] = 2e. Throws std::runtime_error if
/// the system has no solution for a nonzero e (e is then not nilpotent).
NeutralElement jm_neutral(const RootSystem& rs, const LieElement& e);

/// Multiplicities of the integer eigenvalues of ad(h) in [-2 ht(theta), 2 ht(theta)].
/// Throws std::runtime_error when they do not sum to dim g.
Spectrum ad_spectrum(const RootSystem& rs, const LieElement& h);

/// Spectrum of ad of the Cartan element with these coweight coordinates.
Spectrum cartan_spectrum(const RootSystem& rs, const std::vector<int>& coweight);

GradedPieces graded_pieces(const RootSystem& rs, const std::vector<int>& coweight);

/// True when the diagram's Dynkin element is the neutral element of some sl2-triple.
bool is_realizable(const RootSystem& rs, const WeightedDynkinDiagram& d, std::uint64_t seed = 1,
                   std::uint64_t coeff_range = 1'000'000);

/// All realizable mark vectors in {0,1,2}^rank with the given spectrum.
/// Throws std::runtime_error when nothing matches.
AmbiguityClass diagram_from_spectrum(const RootSystem& rs, const Spectrum& spectrum);

int orbit_dimension(const RootSystem& rs, const WeightedDynkinDiagram& d);

/// Roots with pairing >= 2 against the Dynkin element.
Ideal dynkin_ideal(const RootSystem& rs, const WeightedDynkinDiagram& d);

/// f with [e, f] = h and [h, f] = -2f, all three relations re-checked; nullopt
/// when no such f exists. Throws std::invalid_argument unless [h, e] = 2e.
std::optional<LieElement> triple_completion(const RootSystem& rs, const LieElement& e, const LieElement& h);

/// The orbit class of a single nilpotent element, with its orbit dimension.
struct ElementOrbit {
  AmbiguityClass orbit;
  int dimension = 0;
};
ElementOrbit element_orbit(const RootSystem& rs, const LieElement& e);

struct OrbitResult {
  AmbiguityClass orbit;
  int dimension = 0;
  bool converged = true;  // every sample reached the maximal class
  int samples = 0;
};

/// Class of maximal orbit dimension among generic samples of the ideal.
OrbitResult associated_orbit(const RootSystem& rs, const Ideal& ideal, std::uint64_t seed, int trials = 8,
                             std::uint64_t coeff_range = 1'000'000);

}  // namespace dynkin
