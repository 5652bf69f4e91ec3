#include "dynkin/polyhedron.hpp"

#include <stdexcept>

namespace dynkin {

Rat Constraint::lhs(const RatVec& x) const {
  if (normal.size() != x.dim()) throw std::invalid_argument("constraint: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i)
    if (normal[i] != 0) s += normal[i] * x[i];
  return s;
}

bool Constraint::satisfied(const RatVec& x) const {
  const Rat v = lhs(x);
  return sense == Sense::kGreaterEq ? v >= bound : v <= bound;
}

bool Constraint::tight(const RatVec& x) const { return lhs(x) == bound; }

RatVec Constraint::signed_normal() const {
  RatVec v = RatVec::from_ints(normal);
  if (sense == Sense::kLessEq) v *= Rat(-1);
  return v;
}

Rat Constraint::signed_bound() const { return sense == Sense::kGreaterEq ? bound : Rat(-bound); }

bool Polyhedron::contains(const RatVec& x) const {
  for (const auto& c : constraints)
    if (!c.satisfied(x)) return false;
  return true;
}

std::string to_string(const Constraint& c) {
  std::string out;
  for (std::size_t i = 0; i < c.normal.size(); ++i) {
    if (c.normal[i] == 0) continue;
    const int v = c.normal[i];
    if (!out.empty()) out += v > 0 ? " + " : " - ";
    else if (v < 0) out += "-";
    const int a = v < 0 ? -v : v;
    if (a != 1) out += std::to_string(a) + "*";
    out += "x" + std::to_string(i + 1);
  }
  if (out.empty()) out = "0";
  out += c.sense == Sense::kGreaterEq ? " >= " : " <= ";
  out += to_string(c.bound);
  return out;
}

}  // namespace dynkin
