#pragma once

#include <string>
#include <vector>

#include "dynkin/exactlin.hpp"

namespace dynkin {

enum class Sense { kGreaterEq, kLessEq };

/// normal . x (>= | <=) bound, with an integer normal vector.
struct Constraint {
  std::vector<int> normal;
  Rat bound;
  Sense sense = Sense::kGreaterEq;

  Rat lhs(const RatVec& x) const;
  bool satisfied(const RatVec& x) const;
  bool tight(const RatVec& x) const;
  /// Normal oriented so the constraint reads signed_normal . x >= signed_bound.
  RatVec signed_normal() const;
  Rat signed_bound() const;
};

struct Polyhedron {
  int dim = 0;
  std::vector<Constraint> constraints;

  bool contains(const RatVec& x) const;
};

std::string to_string(const Constraint& c);

}  // namespace dynkin
