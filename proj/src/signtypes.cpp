#include "dynkin/signtypes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dynkin {

int Ideal::size() const { return static_cast<int>(std::count(members.begin(), members.end(), true)); }

std::vector<int> Ideal::member_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool is_upward_closed(const RootSystem& rs, const std::vector<bool>& members) {
  for (auto [lo, hi] : rs.poset_covers())
    if (members[lo] && !members[hi]) return false;
  return true;
}

Ideal make_ideal(const RootSystem& rs, std::vector<bool> members) {
  if (static_cast<int>(members.size()) != rs.num_positive()) throw std::invalid_argument("ideal: wrong member count");
  if (!is_upward_closed(rs, members)) throw std::invalid_argument("ideal: member set is not upward closed");
  Ideal ideal;
  ideal.members = std::move(members);
  std::vector<bool> has_lower(rs.num_positive(), false);
  for (auto [lo, hi] : rs.poset_covers())
    if (ideal.members[lo]) has_lower[hi] = true;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (ideal.members[i] && !has_lower[i]) ideal.generators.push_back(i);
  return ideal;
}

Ideal ideal_generated_by(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<bool> members(rs.num_positive(), false);
  for (int b = 0; b < rs.num_positive(); ++b)
    for (int a : roots)
      if (rs.poset_leq(a, b)) {
        members[b] = true;
        break;
      }
  return make_ideal(rs, std::move(members));
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.member_indices() < b.member_indices();
}

std::vector<Ideal> enumerate_ideals(const RootSystem& rs) {
  const int n = rs.num_positive();
  std::vector<std::vector<bool>> comparable(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comparable[a][b] = rs.poset_leq(a, b) || rs.poset_leq(b, a);

  std::vector<Ideal> out;
  std::vector<int> antichain;
  std::function<void(int)> extend = [&](int start) {
    out.push_back(ideal_generated_by(rs, antichain));
    for (int j = start; j < n; ++j) {
      bool free = true;
      for (int a : antichain)
        if (comparable[a][j]) {
          free = false;
          break;
        }
      if (!free) continue;
      antichain.push_back(j);
      extend(j + 1);
      antichain.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

SignType sign_type_of(const RootSystem& rs, const ChamberPoint& x) {
  if (!is_dominant(rs, x)) throw std::invalid_argument("sign_type_of: point is not dominant");
  SignType s;
  s.plus.resize(rs.num_positive());
  for (int i = 0; i < rs.num_positive(); ++i) s.plus[i] = pairing(rs, rs.positive_root(i), x) >= 1;
  return s;
}

SignType sign_type_of_ideal(const Ideal& ideal) { return SignType{ideal.members}; }

Ideal ideal_of_sign_type(const RootSystem& rs, const SignType& s) { return make_ideal(rs, s.plus); }

std::vector<std::pair<Ideal, SignType>> ideal_signtype_bijection(const RootSystem& rs) {
  std::vector<std::pair<Ideal, SignType>> out;
  for (auto& ideal : enumerate_ideals(rs)) {
    auto s = sign_type_of_ideal(ideal);
    out.emplace_back(std::move(ideal), std::move(s));
  }
  return out;
}

Polyhedron closure_polyhedron(const RootSystem& rs, const SignType& s) {
  const int n = rs.num_positive();
  const Ideal plus = ideal_of_sign_type(rs, s);
  Polyhedron p;
  p.dim = rs.rank();
  for (int g : plus.generators) p.constraints.push_back({rs.positive_root(g).coords, Rat(1), Sense::kGreaterEq});

  std::vector<bool> has_upper_zero(n, false);
  for (auto [lo, hi] : rs.poset_covers())
    if (!s.plus[hi]) has_upper_zero[lo] = true;
  for (int i = 0; i < n; ++i)
    if (!s.plus[i] && !has_upper_zero[i]) p.constraints.push_back({rs.positive_root(i).coords, Rat(1), Sense::kLessEq});

  for (int i = 0; i < rs.rank(); ++i)
    if (!s.plus[i]) p.constraints.push_back({rs.positive_root(i).coords, Rat(0), Sense::kGreaterEq});
  return p;
}

Polyhedron full_closure_polyhedron(const RootSystem& rs, const SignType& s) {
  Polyhedron p;
  p.dim = rs.rank();
  for (int i = 0; i < rs.num_positive(); ++i) {
    const auto& c = rs.positive_root(i).coords;
    if (s.plus[i]) {
      p.constraints.push_back({c, Rat(1), Sense::kGreaterEq});
    } else {
      p.constraints.push_back({c, Rat(0), Sense::kGreaterEq});
      p.constraints.push_back({c, Rat(1), Sense::kLessEq});
    }
  }
  return p;
}

}  // namespace dynkin
