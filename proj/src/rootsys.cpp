#include "dynkin/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace dynkin {

std::string RootSystemSpec::label() const { return std::string(1, family) + std::to_string(rank); }

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("root system label too short: '" + text + "'");
  RootSystemSpec spec;
  spec.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  try {
    std::size_t used = 0;
    spec.rank = std::stoi(text.substr(1), &used);
    if (used != text.size() - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank in root system label '" + text + "'");
  }
  spec.validate();
  return spec;
}

void RootSystemSpec::validate() const {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
      throw std::invalid_argument(std::string("unknown root system family '") + family + "'");
  }
  if (!ok) throw std::invalid_argument("rank " + std::to_string(rank) + " is not admissible for type " + family);
}

std::vector<int> WeylElement::apply(const std::vector<int>& x) const {
  const std::size_t n = x.size();
  std::vector<int> y(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += matrix[i * n + j] * x[j];
  return y;
}

RatVec WeylElement::apply(const RatVec& x) const {
  const std::size_t n = x.dim();
  RatVec y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (matrix[i * n + j] != 0) y[i] += matrix[i * n + j] * x[j];
  return y;
}

namespace {

struct DiagramData {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> sym;  // short roots 1, long roots 2 or 3
};

DiagramData diagram(const RootSystemSpec& spec) {
  const int n = spec.rank;
  DiagramData d;
  d.sym.assign(n, 1);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (spec.family) {
    case 'A':
      chain(n);
      break;
    case 'B':
      chain(n);
      for (int i = 0; i + 1 < n; ++i) d.sym[i] = 2;
      break;
    case 'C':
      chain(n);
      d.sym[n - 1] = 2;
      break;
    case 'D':
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      d.sym = {2, 2, 1, 1};
      break;
    case 'G':
      d.edges.emplace_back(0, 1);
      d.sym = {3, 1};
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

std::vector<int> RootSystem::root_coords(int root_index) const {
  const int n = num_positive();
  if (root_index < n) return positive_[root_index].coords;
  auto c = positive_[root_index - n].coords;
  for (auto& v : c) v = -v;
  return c;
}

int RootSystem::find_root(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negate(int root_index) const {
  const int n = num_positive();
  return root_index < n ? root_index + n : root_index - n;
}

Rat RootSystem::root_length2(int root_index) const {
  const auto c = root_coords(root_index);
  int b = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) b += c[i] * form_[i][j] * c[j];
  return make_rat(b, d_max_);
}

int RootSystem::coroot_pairing(int root_index, int simple) const {
  const auto c = root_coords(root_index);
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += c[i] * cartan_[i][simple];
  return s;
}

std::vector<int> RootSystem::coroot_in_simple_coroots(int root_index) const {
  // alpha^vee = sum c_i (d_i / d_alpha) alpha_i^vee
  const auto c = root_coords(root_index);
  int b = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) b += c[i] * form_[i][j] * c[j];
  const int d_alpha = b / 2;
  std::vector<int> out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = c[i] * sym_[i] / d_alpha;
  return out;
}

RootSystem RootSystem::with_structure_constant(int a, int b, int value) const {
  RootSystem copy = *this;
  copy.n_[a][b] = value;
  return copy;
}

bool RootSystem::poset_leq(int a, int b) const {
  const auto& ca = positive_[a].coords;
  const auto& cb = positive_[b].coords;
  for (int i = 0; i < rank(); ++i)
    if (cb[i] < ca[i]) return false;
  return true;
}

std::vector<BasisTerm> RootSystem::basis_bracket(int i, int j) const {
  const int n = num_positive();
  const int roots = 2 * n;
  std::vector<BasisTerm> out;
  const bool i_root = i < roots;
  const bool j_root = j < roots;
  if (!i_root && !j_root) return out;
  if (!i_root) {
    const int k = coroot_pairing(j, i - roots);
    if (k != 0) out.push_back({j, k});
    return out;
  }
  if (!j_root) {
    const int k = coroot_pairing(i, j - roots);
    if (k != 0) out.push_back({i, -k});
    return out;
  }
  if (j == negate(i)) {
    // [e_a, e_{-a}] = h_a, with h_{-a} = -h_a.
    const auto h = coroot_in_simple_coroots(i);
    for (int s = 0; s < rank(); ++s)
      if (h[s] != 0) out.push_back({roots + s, h[s]});
    return out;
  }
  const int s = sum_[i][j];
  if (s >= 0 && n_[i][j] != 0) out.push_back({s, n_[i][j]});
  return out;
}

RootSystem build_root_system(const RootSystemSpec& spec) {
  spec.validate();
  RootSystem rs;
  rs.spec_ = spec;
  const int r = spec.rank;
  const DiagramData dd = diagram(spec);
  rs.sym_ = dd.sym;
  rs.d_max_ = *std::max_element(dd.sym.begin(), dd.sym.end());

  // Symmetrised form B(alpha_i, alpha_j) = cartan(i, j) * d_j.
  rs.form_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) rs.form_[i][i] = 2 * dd.sym[i];
  for (auto [i, j] : dd.edges) {
    const int b = -std::max(dd.sym[i], dd.sym[j]);
    rs.form_[i][j] = rs.form_[j][i] = b;
  }
  rs.cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.cartan_[i][j] = rs.form_[i][j] / dd.sym[j];

  // Positive roots by root strings, one height level at a time.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    level.push_back(c);
    known.insert(c);
  }
  std::vector<std::vector<int>> all = level;
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : level) {
      for (int j = 0; j < r; ++j) {
        std::vector<int> down = beta;
        int p = 0;
        while (true) {
          down[j] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int i = 0; i < r; ++i) pair += beta[i] * rs.cartan_[i][j];
        const int q = p - pair;
        if (q > 0) {
          std::vector<int> up = beta;
          up[j] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }

  auto height = [](const std::vector<int>& c) {
    int h = 0;
    for (int v : c) h += v;
    return h;
  };
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  const int n = static_cast<int>(all.size());
  for (const auto& c : all) {
    Root root;
    root.coords = c;
    root.height = height(c);
    int b = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) b += c[i] * rs.form_[i][j] * c[j];
    root.is_long = (b == 2 * rs.d_max_);
    rs.positive_.push_back(root);
  }
  for (int k = 0; k < 2 * n; ++k) rs.index_[rs.root_coords(k)] = k;
  rs.highest_ = n - 1;

  rs.sum_.assign(2 * n, std::vector<int>(2 * n, -1));
  for (int a = 0; a < 2 * n; ++a) {
    const auto ca = rs.root_coords(a);
    for (int b = 0; b < 2 * n; ++b) {
      auto cb = rs.root_coords(b);
      for (int i = 0; i < r; ++i) cb[i] += ca[i];
      rs.sum_[a][b] = rs.find_root(cb);
    }
  }

  for (int a = 0; a < n; ++a)
    for (int s = 0; s < r; ++s) {
      auto c = rs.positive_[a].coords;
      c[s] += 1;
      const int b = rs.find_root(c);
      if (b >= 0) rs.covers_.emplace_back(a, b);
    }

  // Gram matrix of the fundamental coweights: d_max * B^{-1}.
  RatMat b_mat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) b_mat(i, j) = rs.form_[i][j];
  rs.gram_ = Rat(rs.d_max_) * inverse(b_mat);

  // Structure constants. Extraspecial pairs get N = +(p + 1); every other
  // pair follows from the four-root and three-root relations in terms of
  // pairs whose sums have lower height.
  rs.n_.assign(2 * n, std::vector<int>(2 * n, 0));
  auto len2 = [&](int idx) { return rs.root_length2(idx); };
  std::vector<std::vector<char>> known_pos(n, std::vector<char>(n, 0));

  std::function<Rat(int, int)> n_value = [&](int a, int b) -> Rat {
    if (a == b || b == rs.negate(a)) return 0;
    if (rs.sum_[a][b] < 0) return 0;
    const bool pa = a < n, pb = b < n;
    if (pa && pb) {
      if (!known_pos[a][b]) throw std::logic_error("structure constant requested before it was computed");
      return rs.n_[a][b];
    }
    if (!pa && !pb) return -n_value(rs.negate(a), rs.negate(b));
    // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
    const int c = rs.negate(rs.sum_[a][b]);
    const bool pc = c < n;
    if (pb == pc) return len2(c) / len2(a) * n_value(b, c);
    return len2(c) / len2(b) * n_value(c, a);
  };

  for (int xi = r; xi < n; ++xi) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
      const int b = rs.sum_[xi][rs.negate(a)];
      if (b >= 0 && b < n && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) throw std::logic_error("non-simple root without a decomposition");
    const auto [alpha, beta] = pairs.front();
    int p = 0;
    {
      auto c = rs.positive_[beta].coords;
      const auto& ca = rs.positive_[alpha].coords;
      while (true) {
        for (int i = 0; i < r; ++i) c[i] -= ca[i];
        if (rs.find_root(c) < 0) break;
        ++p;
      }
    }
    rs.n_[alpha][beta] = p + 1;
    rs.n_[beta][alpha] = -(p + 1);
    known_pos[alpha][beta] = known_pos[beta][alpha] = 1;
    const Rat n_ab = p + 1;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [gamma, delta] = pairs[k];
      const int ng = rs.negate(gamma), nd = rs.negate(delta);
      Rat total = 0;
      const int bg = rs.sum_[beta][ng];
      if (bg >= 0) total += n_value(beta, ng) * n_value(alpha, nd) / len2(bg);
      const int ag = rs.sum_[alpha][ng];
      if (ag >= 0) total += n_value(ng, alpha) * n_value(beta, nd) / len2(ag);
      const Rat value = len2(xi) / n_ab * total;
      if (value.get_den() != 1) throw std::logic_error("non-integral structure constant");
      const int v = static_cast<int>(value.get_num().get_si());
      rs.n_[gamma][delta] = v;
      rs.n_[delta][gamma] = -v;
      known_pos[gamma][delta] = known_pos[delta][gamma] = 1;
    }
  }
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      if (a < n && b < n) continue;
      const Rat v = n_value(a, b);
      if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
      rs.n_[a][b] = static_cast<int>(v.get_num().get_si());
    }
  return rs;
}

Rat pairing(const std::vector<int>& root_coords, const RatVec& x) {
  if (root_coords.size() != x.dim()) throw std::invalid_argument("pairing: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (root_coords[i] != 0) s += root_coords[i] * x[i];
  return s;
}

Rat pairing(const RootSystem&, const Root& root, const ChamberPoint& x) { return pairing(root.coords, x.coords); }

Rat norm_squared(const RootSystem& rs, const ChamberPoint& x) { return quadratic_form(rs.gram_coweight(), x.coords); }

bool is_dominant(const RootSystem& rs, const ChamberPoint& x) {
  for (int i = 0; i < rs.rank(); ++i)
    if (sgn(x.coords[i]) < 0) return false;
  return true;
}

std::vector<int> exponents(const RootSystemSpec& spec) {
  spec.validate();
  const int n = spec.rank;
  std::vector<int> e;
  switch (spec.family) {
    case 'A':
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case 'E':
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case 'F': e = {1, 5, 7, 11}; break;
    case 'G': e = {1, 5}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

int coxeter_number(const RootSystemSpec& spec) { return exponents(spec).back() + 1; }

std::uint64_t weyl_group_order(const RootSystemSpec& spec) {
  std::uint64_t order = 1;
  for (int e : exponents(spec)) order *= static_cast<std::uint64_t>(e + 1);
  return order;
}

std::uint64_t catalan_number(const RootSystemSpec& spec) {
  const int h = coxeter_number(spec);
  Rat c = 1;
  for (int e : exponents(spec)) c *= make_rat(h + e + 1, e + 1);
  return c.get_num().get_ui();
}

RatVec reflect(const RootSystem& rs, int simple, const RatVec& x) {
  RatVec y = x;
  const Rat xi = x[simple];
  if (sgn(xi) == 0) return y;
  for (int k = 0; k < rs.rank(); ++k) y[k] -= xi * rs.cartan(k, simple);
  return y;
}

namespace {

std::vector<int> reflect_int(const RootSystem& rs, int simple, const std::vector<int>& x) {
  std::vector<int> y = x;
  const int xi = x[simple];
  if (xi == 0) return y;
  for (int k = 0; k < rs.rank(); ++k) y[k] -= xi * rs.cartan(k, simple);
  return y;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::vector<OrbitPoint> weyl_orbit(const RootSystem& rs, const std::vector<int>& x, std::uint64_t ceiling) {
  std::vector<OrbitPoint> out;
  std::unordered_map<std::vector<int>, std::size_t, VecHash> seen;
  out.push_back({x, {}});
  seen.emplace(x, 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      auto y = reflect_int(rs, i, out[k].point);
      if (seen.count(y)) continue;
      if (out.size() >= ceiling) throw WeylCeilingExceeded("Weyl orbit exceeds ceiling " + std::to_string(ceiling));
      std::vector<int> word;
      word.reserve(out[k].word.size() + 1);
      word.push_back(i);
      word.insert(word.end(), out[k].word.begin(), out[k].word.end());
      seen.emplace(y, out.size());
      out.push_back({std::move(y), std::move(word)});
    }
  }
  return out;
}

std::vector<WeylElement> weyl_elements(const RootSystem& rs, std::uint64_t ceiling) {
  const std::uint64_t order = weyl_group_order(rs.spec());
  if (order > ceiling) {
    throw WeylCeilingExceeded("|W(" + rs.spec().label() + ")| = " + std::to_string(order) + " exceeds ceiling " +
                              std::to_string(ceiling));
  }
  const int r = rs.rank();
  // w is determined by w(rho^vee); rho^vee = (1, ..., 1) has trivial stabiliser.
  const auto orbit = weyl_orbit(rs, std::vector<int>(r, 1), ceiling);
  std::vector<WeylElement> out;
  out.reserve(orbit.size());
  for (const auto& pt : orbit) {
    WeylElement w;
    w.word = pt.word;
    w.matrix.assign(r * r, 0);
    for (int col = 0; col < r; ++col) {
      std::vector<int> e(r, 0);
      e[col] = 1;
      for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) e = reflect_int(rs, *it, e);
      for (int row = 0; row < r; ++row) w.matrix[row * r + col] = e[row];
    }
    out.push_back(std::move(w));
  }
  return out;
}

DominantResult dominant_representative(const RootSystem& rs, const ChamberPoint& x) {
  DominantResult res{x, {}};
  while (true) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (sgn(res.point.coords[i]) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return res;
    res.point.coords = reflect(rs, neg, res.point.coords);
    res.word.push_back(neg);
  }
}

JacobiResult verify_jacobi(const RootSystem& rs) {
  const int dim = rs.dim_algebra();
  std::vector<std::vector<std::vector<BasisTerm>>> table(dim, std::vector<std::vector<BasisTerm>>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) table[i][j] = rs.basis_bracket(i, j);

  auto describe = [&](int i) {
    const int n = rs.num_positive();
    std::ostringstream os;
    if (i < 2 * n) {
      os << "e[";
      const auto c = rs.root_coords(i);
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
      os << "]";
    } else {
      os << "h" << (i - 2 * n + 1);
    }
    return os.str();
  };

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::map<int, std::int64_t> acc;
      for (const auto& t : table[i][j]) acc[t.index] += t.coeff;
      for (const auto& t : table[j][i]) acc[t.index] += t.coeff;
      for (const auto& [k, v] : acc)
        if (v != 0) return {false, "antisymmetry fails for (" + describe(i) + ", " + describe(j) + ")"};
    }

  std::vector<std::int64_t> acc(dim, 0);
  std::vector<int> touched;
  auto add_nested = [&](int x, int y, int z) {
    // [x, [y, z]]
    for (const auto& t : table[y][z])
      for (const auto& u : table[x][t.index]) {
        if (acc[u.index] == 0) touched.push_back(u.index);
        acc[u.index] += t.coeff * u.coeff;
      }
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        touched.clear();
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        bool bad = false;
        for (int idx : touched) {
          if (acc[idx] != 0) bad = true;
          acc[idx] = 0;
        }
        if (bad) {
          return {false, "Jacobi identity fails for (" + describe(i) + ", " + describe(j) + ", " + describe(k) + ")"};
        }
      }
  return {true, ""};
}

}  // namespace dynkin
