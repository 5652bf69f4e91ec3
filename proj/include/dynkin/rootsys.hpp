#pragma once

// Irreducible reduced root systems of types A-G, with the data every other
// module reads: positive roots in the simple-root basis, the invariant form,
// the Weyl group action on the coweight space V, and Chevalley structure
// constants.
//
// Conventions:
//  * cartan(i, j) = <alpha_i, alpha_j^vee>.
//  * Points of V are written in the fundamental-coweight basis, so the
//    pairing of a root with a point is an integer-coefficient linear form.
//  * The invariant form gives long roots squared length 2.
//  * B_n, C_n, F_4 follow Bourbaki numbering. G_2 numbers the long simple
//    root first.
//  * Chevalley basis index layout: [0, N) positive root vectors e_beta,
//    [N, 2N) negative root vectors e_{-beta}, [2N, 2N + rank) simple coroots
//    h_i. A "root index" is a value in [0, 2N) with the same meaning.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/exactlin.hpp"

namespace dynkin {

struct RootSystemSpec {
  char family = 'A';
  int rank = 1;

  /// "A2", "G2", ...
  std::string label() const;
  static RootSystemSpec parse(const std::string& text);
  /// Throws std::invalid_argument when the rank is not admissible for the family.
  void validate() const;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

struct Root {
  std::vector<int> coords;
  int height = 0;
  bool is_long = true;
};

/// A point of V in fundamental-coweight coordinates: alpha_i(x) = coords[i].
struct ChamberPoint {
  RatVec coords;

  ChamberPoint() = default;
  explicit ChamberPoint(RatVec c) : coords(std::move(c)) {}
  static ChamberPoint from_ints(const std::vector<int>& v) { return ChamberPoint(RatVec::from_ints(v)); }

  std::size_t dim() const { return coords.dim(); }
  friend bool operator==(const ChamberPoint& a, const ChamberPoint& b) { return a.coords == b.coords; }
  friend bool operator<(const ChamberPoint& a, const ChamberPoint& b) { return a.coords < b.coords; }
};

/// Sparse integer combination of Chevalley basis vectors.
struct BasisTerm {
  int index;
  std::int64_t coeff;
};

/// Square integer matrix acting on coweight coordinates (row-major).
struct WeylElement {
  std::vector<int> matrix;
  std::vector<int> word;  // simple reflection indices, applied right to left

  std::vector<int> apply(const std::vector<int>& x) const;
  RatVec apply(const RatVec& x) const;
};

struct JacobiResult {
  bool passed = true;
  std::string detail;  // first violating triple or antisymmetry failure
};

class RootSystem {
 public:
  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int dim_algebra() const { return 2 * num_positive() + rank(); }

  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& positive_root(int i) const { return positive_[i]; }
  /// Integer symmetrizers: 2 * d_i is the length of alpha_i up to a global scale.
  const std::vector<int>& symmetrizers() const { return sym_; }
  const RatMat& gram_coweight() const { return gram_; }
  int highest_root_index() const { return highest_; }
  const std::vector<std::pair<int, int>>& poset_covers() const { return covers_; }

  /// Coordinates of the root with the given root index (negatives for [N, 2N)).
  std::vector<int> root_coords(int root_index) const;
  /// Root index of a coordinate vector, or -1 if it is not a root.
  int find_root(const std::vector<int>& coords) const;
  /// Root index of the sum of two roots, or -1 if the sum is not a root.
  int root_sum(int a, int b) const { return sum_[a][b]; }
  int negate(int root_index) const;

  /// (a, a) for the root with this index, normalised so long roots give 2.
  Rat root_length2(int root_index) const;
  /// <root, alpha_i^vee>.
  int coroot_pairing(int root_index, int simple) const;
  /// The coroot of the given root as integer coefficients of the simple coroots.
  std::vector<int> coroot_in_simple_coroots(int root_index) const;

  /// N_{a,b} for root indices with a + b a root; zero otherwise.
  int structure_constant(int a, int b) const { return n_[a][b]; }
  /// Copy with one structure constant overwritten, for fault injection.
  RootSystem with_structure_constant(int a, int b, int value) const;

  /// Bracket of two Chevalley basis vectors.
  std::vector<BasisTerm> basis_bracket(int i, int j) const;

  /// Positive root a <= b in the root poset (b - a a nonnegative combination).
  bool poset_leq(int a, int b) const;

 private:
  friend RootSystem build_root_system(const RootSystemSpec& spec);

  RootSystemSpec spec_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> sum_;
  std::vector<std::vector<int>> n_;
  std::vector<std::vector<int>> form_;  // symmetrised form on simple roots, integer
  int d_max_ = 1;
  RatMat gram_;
  int highest_ = 0;
  std::vector<std::pair<int, int>> covers_;
};

/// Throws std::invalid_argument for an inadmissible spec.
RootSystem build_root_system(const RootSystemSpec& spec);

/// Sum of c_j * x_j for the root's simple-root coordinates.
Rat pairing(const RootSystem& rs, const Root& root, const ChamberPoint& x);
Rat pairing(const std::vector<int>& root_coords, const RatVec& x);

/// x^T G x with G the coweight Gram matrix.
Rat norm_squared(const RootSystem& rs, const ChamberPoint& x);

bool is_dominant(const RootSystem& rs, const ChamberPoint& x);

/// Exponents of the Weyl group (classical tables).
std::vector<int> exponents(const RootSystemSpec& spec);
int coxeter_number(const RootSystemSpec& spec);
/// prod (e_i + 1).
std::uint64_t weyl_group_order(const RootSystemSpec& spec);
/// prod (h + e_i + 1) / (e_i + 1).
std::uint64_t catalan_number(const RootSystemSpec& spec);

class WeylCeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultWeylCeiling = 2'000'000;

/// Every Weyl group element exactly once, in breadth-first order from the
/// identity (so words are reduced). Throws WeylCeilingExceeded when |W|
/// exceeds the ceiling.
std::vector<WeylElement> weyl_elements(const RootSystem& rs, std::uint64_t ceiling = kDefaultWeylCeiling);

/// The simple reflection s_i applied to a point in coweight coordinates.
RatVec reflect(const RootSystem& rs, int simple, const RatVec& x);

struct OrbitPoint {
  std::vector<int> point;
  std::vector<int> word;
};

/// Distinct W-images of an integral point, breadth-first, with witness words.
std::vector<OrbitPoint> weyl_orbit(const RootSystem& rs, const std::vector<int>& x,
                                   std::uint64_t ceiling = kDefaultWeylCeiling);

struct DominantResult {
  ChamberPoint point;
  std::vector<int> word;  // reflections applied in order
};

/// Reflects in the first simple root with a negative coordinate until dominant.
DominantResult dominant_representative(const RootSystem& rs, const ChamberPoint& x);

/// Antisymmetry plus the Jacobi identity on every triple of basis vectors.
JacobiResult verify_jacobi(const RootSystem& rs);

}  // namespace dynkin
