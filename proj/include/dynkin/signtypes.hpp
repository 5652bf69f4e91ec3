#pragma once

// Dominant sign types and B-stable ideals of the nilradical.
//
// A B-stable ideal is an upward-closed set of positive roots; its minimal
// elements form an antichain that determines it. A dominant sign type marks
// each positive root + (pairing >= 1) or 0 (0 <= pairing < 1); its plus-set
// is always such an upward-closed set, and every ideal arises this way.

#include <vector>

#include "dynkin/polyhedron.hpp"
#include "dynkin/rootsys.hpp"

namespace dynkin {

struct Ideal {
  std::vector<bool> members;   // indexed by positive-root index
  std::vector<int> generators; // minimal members, ascending

  int size() const;
  bool contains(int root) const { return members[root]; }
  std::vector<int> member_indices() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members == b.members; }
};

struct SignType {
  std::vector<bool> plus;  // true: +, false: 0

  friend bool operator==(const SignType& a, const SignType& b) { return a.plus == b.plus; }
};

/// Builds the ideal with the given members; throws if they are not upward closed.
Ideal make_ideal(const RootSystem& rs, std::vector<bool> members);
/// Upward closure of a set of positive roots.
Ideal ideal_generated_by(const RootSystem& rs, const std::vector<int>& roots);
bool is_upward_closed(const RootSystem& rs, const std::vector<bool>& members);

/// Total order on ideals: cardinality, then the ascending member-index list.
bool ideal_less(const Ideal& a, const Ideal& b);

/// Every ideal exactly once, by recursive antichain extension, sorted by ideal_less.
std::vector<Ideal> enumerate_ideals(const RootSystem& rs);

/// Throws std::invalid_argument for a non-dominant point.
SignType sign_type_of(const RootSystem& rs, const ChamberPoint& x);

SignType sign_type_of_ideal(const Ideal& ideal);
/// Throws std::invalid_argument if the plus-set is not upward closed.
Ideal ideal_of_sign_type(const RootSystem& rs, const SignType& s);
std::vector<std::pair<Ideal, SignType>> ideal_signtype_bijection(const RootSystem& rs);

/// Reduced description of the closed region: generators of the plus-set
/// (>= 1), maximal zero roots (<= 1), simple zero roots (>= 0).
Polyhedron closure_polyhedron(const RootSystem& rs, const SignType& s);

/// Unreduced description: every plus root >= 1, every zero root in [0, 1].
Polyhedron full_closure_polyhedron(const RootSystem& rs, const SignType& s);

}  // namespace dynkin
