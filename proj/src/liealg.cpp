#include "dynkin/liealg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "dynkin/random.hpp"

namespace dynkin {

LieElement LieElement::root_vector(const RootSystem& rs, int root_index, const Rat& coeff) {
  LieElement x(rs.rank());
  x.add_root(root_index, coeff);
  return x;
}

LieElement LieElement::cartan(const RatVec& coroot_coeffs) {
  LieElement x(static_cast<int>(coroot_coeffs.dim()));
  x.cartan_part_ = coroot_coeffs;
  return x;
}

LieElement LieElement::from_coweight(const RootSystem& rs, const RatVec& coweight) {
  // coweight = C y, where y are the simple-coroot coefficients.
  const int r = rs.rank();
  RatMat c(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c(i, j) = rs.cartan(i, j);
  auto sol = solve_linear(c, coweight);
  if (!sol) throw std::logic_error("Cartan matrix is singular");
  return cartan(sol->particular);
}

LieElement LieElement::from_vector(const RootSystem& rs, const RatVec& v) {
  const int roots = 2 * rs.num_positive();
  if (static_cast<int>(v.dim()) != rs.dim_algebra()) throw std::invalid_argument("from_vector: wrong dimension");
  LieElement x(rs.rank());
  for (int i = 0; i < roots; ++i)
    if (sgn(v[i]) != 0) x.root_part_.emplace(i, v[i]);
  for (int i = 0; i < rs.rank(); ++i) x.cartan_part_[i] = v[roots + i];
  return x;
}

void LieElement::add_root(int root_index, const Rat& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = root_part_.emplace(root_index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) root_part_.erase(it);
  }
}

void LieElement::add_cartan(int simple, const Rat& coeff) { cartan_part_[simple] += coeff; }

bool LieElement::is_zero() const { return root_part_.empty() && cartan_part_.is_zero(); }

RatVec LieElement::to_vector(const RootSystem& rs) const {
  const int roots = 2 * rs.num_positive();
  RatVec v(rs.dim_algebra());
  for (const auto& [k, c] : root_part_) v[k] = c;
  for (int i = 0; i < rs.rank(); ++i) v[roots + i] = cartan_part_[i];
  return v;
}

RatVec LieElement::cartan_coweight(const RootSystem& rs) const {
  RatVec out(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (sgn(cartan_part_[j]) != 0) out[i] += cartan_part_[j] * rs.cartan(i, j);
  return out;
}

std::vector<int> LieElement::support() const {
  std::vector<int> out;
  for (const auto& [k, c] : root_part_) out.push_back(k);
  return out;
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [k, c] : other.root_part_) add_root(k, c);
  if (cartan_part_.dim() == 0) cartan_part_ = RatVec(other.cartan_part_.dim());
  cartan_part_ += other.cartan_part_;
  return *this;
}

LieElement& LieElement::operator*=(const Rat& s) {
  if (sgn(s) == 0) {
    root_part_.clear();
    cartan_part_ = RatVec(cartan_part_.dim());
    return *this;
  }
  for (auto& [k, c] : root_part_) c *= s;
  cartan_part_ *= s;
  return *this;
}

std::string to_string(const RootSystem& rs, const LieElement& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.root_part()) {
    os << (first ? "" : " + ") << to_string(c) << "*e[";
    const auto coords = rs.root_coords(k);
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << "]";
    first = false;
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (sgn(x.cartan_part()[i]) == 0) continue;
    os << (first ? "" : " + ") << to_string(x.cartan_part()[i]) << "*h" << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string to_string(const WeightedDynkinDiagram& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.marks.size(); ++i) out += (i ? "," : "") + std::to_string(d.marks[i]);
  return out + ")";
}

ChamberPoint dynkin_point(const WeightedDynkinDiagram& d) { return ChamberPoint::from_ints(d.marks); }

ChamberPoint half_dynkin_point(const WeightedDynkinDiagram& d) {
  RatVec v(d.marks.size());
  for (std::size_t i = 0; i < d.marks.size(); ++i) v[i] = make_rat(d.marks[i], 2);
  return ChamberPoint(v);
}

bool AmbiguityClass::contains(const WeightedDynkinDiagram& d) const {
  return std::find(diagrams.begin(), diagrams.end(), d) != diagrams.end();
}

std::string to_string(const AmbiguityClass& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.diagrams.size(); ++i) out += (i ? " " : "") + to_string(c.diagrams[i]);
  return out + "}";
}

namespace {

// Sparse bracket on dense coordinate vectors, skipping zeros.
void accumulate_bracket(const RootSystem& rs, const std::vector<std::pair<int, Rat>>& x,
                        const std::vector<std::pair<int, Rat>>& y, RatVec& out) {
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& t : rs.basis_bracket(i, j)) out[t.index] += a * b * Rat(t.coeff);
}

std::vector<std::pair<int, Rat>> sparse_terms(const RootSystem& rs, const LieElement& x) {
  std::vector<std::pair<int, Rat>> out;
  for (const auto& [k, c] : x.root_part()) out.emplace_back(k, c);
  const int roots = 2 * rs.num_positive();
  for (int i = 0; i < rs.rank(); ++i)
    if (sgn(x.cartan_part()[i]) != 0) out.emplace_back(roots + i, x.cartan_part()[i]);
  return out;
}

}  // namespace

LieElement bracket(const RootSystem& rs, const LieElement& x, const LieElement& y) {
  RatVec out(rs.dim_algebra());
  accumulate_bracket(rs, sparse_terms(rs, x), sparse_terms(rs, y), out);
  return LieElement::from_vector(rs, out);
}

RatMat ad_matrix(const RootSystem& rs, const LieElement& x) {
  const int dim = rs.dim_algebra();
  RatMat m(dim, dim);
  const auto terms = sparse_terms(rs, x);
  for (int j = 0; j < dim; ++j)
    for (const auto& [i, a] : terms)
      for (const auto& t : rs.basis_bracket(i, j)) m(t.index, j) += a * Rat(t.coeff);
  return m;
}

LieElement sample_on_support(const RootSystem& rs, const std::vector<int>& support, std::uint64_t stream_seed,
                             std::uint64_t coeff_range) {
  SplitMix64 rng(stream_seed);
  LieElement e(rs.rank());
  for (int k : support) {
    const std::uint64_t c = rng.uniform_positive(coeff_range);
    e.add_root(k, Rat(static_cast<unsigned long>(c)));
  }
  return e;
}

std::vector<LieElement> sample_generic(const RootSystem& rs, const Ideal& ideal, std::uint64_t seed, int trials,
                                       std::uint64_t coeff_range) {
  if (trials < 1) throw std::invalid_argument("sample_generic: trials must be positive");
  const auto support = ideal.member_indices();
  if (support.empty()) return {LieElement::zero(rs)};
  std::vector<LieElement> out;
  for (int t = 0; t < trials; ++t)
    out.push_back(sample_on_support(rs, support, derive_seed(seed, static_cast<std::uint64_t>(t)), coeff_range));
  return out;
}

NeutralElement jm_neutral(const RootSystem& rs, const LieElement& e) {
  if (e.is_zero()) return {LieElement::zero(rs), true};
  // h' = ad(e) z with [h', e] = 2e, i.e. ad(e)^2 z = -2e.
  const RatMat ad_e = ad_matrix(rs, e);
  const RatMat ad_e2 = ad_e * ad_e;
  RatVec rhs = e.to_vector(rs);
  rhs *= Rat(-2);
  auto sol = solve_linear(ad_e2, rhs);
  if (!sol) throw std::runtime_error("jm_neutral: no neutral element in the image of ad(e); e is not nilpotent");
  LieElement h = LieElement::from_vector(rs, ad_e * sol->particular);
  if (!(bracket(rs, h, e) == Rat(2) * e)) throw std::logic_error("jm_neutral: [h, e] != 2e after solve");
  return {h, false};
}

Spectrum ad_spectrum(const RootSystem& rs, const LieElement& h) {
  const int dim = rs.dim_algebra();
  const int bound = 2 * rs.positive_root(rs.highest_root_index()).height;
  const RatMat ad_h = ad_matrix(rs, h);
  Spectrum spec;
  int total = 0;
  // 0, 1, -1, 2, -2, ... stopping once the multiplicities fill g.
  for (int step = 0; step <= 2 * bound && total < dim; ++step) {
    const int k = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    RatMat shifted = ad_h;
    for (int i = 0; i < dim; ++i) shifted(i, i) -= k;
    const int mult = static_cast<int>(kernel_dimension(shifted));
    if (mult > 0) spec[k] = mult;
    total += mult;
  }
  if (total != dim) {
    throw std::runtime_error("ad_spectrum: integer eigenspaces have total dimension " + std::to_string(total) +
                             ", expected " + std::to_string(dim));
  }
  return spec;
}

Spectrum cartan_spectrum(const RootSystem& rs, const std::vector<int>& coweight) {
  Spectrum spec;
  spec[0] += rs.rank();
  for (int k = 0; k < rs.num_positive(); ++k) {
    const auto& c = rs.positive_root(k).coords;
    int p = 0;
    for (int i = 0; i < rs.rank(); ++i) p += c[i] * coweight[i];
    spec[p] += 1;
    spec[-p] += 1;
  }
  return spec;
}

GradedPieces graded_pieces(const RootSystem& rs, const std::vector<int>& coweight) {
  GradedPieces g;
  g.cartan_multiplicity = rs.rank();
  for (int k = 0; k < 2 * rs.num_positive(); ++k) {
    const auto c = rs.root_coords(k);
    int p = 0;
    for (int i = 0; i < rs.rank(); ++i) p += c[i] * coweight[i];
    g.roots_by_eigenvalue[p].push_back(k);
  }
  return g;
}

bool is_realizable(const RootSystem& rs, const WeightedDynkinDiagram& d, std::uint64_t seed,
                   std::uint64_t coeff_range) {
  const auto pieces = graded_pieces(rs, d.marks);
  std::vector<int> degree_two;
  if (auto it = pieces.roots_by_eigenvalue.find(2); it != pieces.roots_by_eigenvalue.end()) degree_two = it->second;
  const LieElement h = LieElement::from_coweight(rs, RatVec::from_ints(d.marks));
  const LieElement e = sample_on_support(rs, degree_two, seed, coeff_range);
  return triple_completion(rs, e, h).has_value();
}

namespace {

struct SpectrumIndex {
  std::map<Spectrum, std::vector<WeightedDynkinDiagram>> candidates;
  std::map<WeightedDynkinDiagram, bool> realizable;
};

std::mutex g_index_mutex;
std::map<std::string, SpectrumIndex> g_indices;

}  // namespace

AmbiguityClass diagram_from_spectrum(const RootSystem& rs, const Spectrum& spectrum) {
  const std::string key = rs.spec().label();
  std::vector<WeightedDynkinDiagram> candidates;
  {
    std::lock_guard<std::mutex> lock(g_index_mutex);
    auto& index = g_indices[key];
    if (index.candidates.empty()) {
      const int r = rs.rank();
      int total = 1;
      for (int i = 0; i < r; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        WeightedDynkinDiagram d;
        d.marks.resize(r);
        int c = code;
        for (int i = r - 1; i >= 0; --i) {
          d.marks[i] = c % 3;
          c /= 3;
        }
        index.candidates[cartan_spectrum(rs, d.marks)].push_back(d);
      }
    }
    auto it = index.candidates.find(spectrum);
    if (it != index.candidates.end()) candidates = it->second;
  }
  AmbiguityClass cls;
  for (const auto& d : candidates) {
    bool ok;
    {
      std::lock_guard<std::mutex> lock(g_index_mutex);
      auto& index = g_indices[key];
      auto it = index.realizable.find(d);
      if (it == index.realizable.end()) {
        it = index.realizable.emplace(d, is_realizable(rs, d)).first;
      }
      ok = it->second;
    }
    if (ok) cls.diagrams.push_back(d);
  }
  if (cls.diagrams.empty()) throw std::runtime_error("diagram_from_spectrum: no realizable diagram has this spectrum");
  std::sort(cls.diagrams.begin(), cls.diagrams.end());
  return cls;
}

int orbit_dimension(const RootSystem& rs, const WeightedDynkinDiagram& d) {
  int zero = 0, one = 0;
  for (const auto& root : rs.positive_roots()) {
    int p = 0;
    for (int i = 0; i < rs.rank(); ++i) p += root.coords[i] * d.marks[i];
    if (p == 0) zero += 2;  // alpha and -alpha
    if (p == 1) one += 1;   // only alpha pairs to +1
  }
  return rs.dim_algebra() - (zero + rs.rank()) - one;
}

Ideal dynkin_ideal(const RootSystem& rs, const WeightedDynkinDiagram& d) {
  std::vector<bool> members(rs.num_positive(), false);
  for (int k = 0; k < rs.num_positive(); ++k) {
    int p = 0;
    for (int i = 0; i < rs.rank(); ++i) p += rs.positive_root(k).coords[i] * d.marks[i];
    members[k] = p >= 2;
  }
  return make_ideal(rs, std::move(members));
}

std::optional<LieElement> triple_completion(const RootSystem& rs, const LieElement& e, const LieElement& h) {
  if (!(bracket(rs, h, e) == Rat(2) * e)) throw std::invalid_argument("triple_completion: [h, e] != 2e");
  const int dim = rs.dim_algebra();
  const RatMat ad_e = ad_matrix(rs, e);
  const RatMat ad_h = ad_matrix(rs, h);
  RatMat system(2 * dim, dim);
  RatVec rhs(2 * dim);
  const RatVec hv = h.to_vector(rs);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      system(i, j) = ad_e(i, j);
      system(dim + i, j) = ad_h(i, j);
    }
    system(dim + i, i) += 2;
    rhs[i] = hv[i];
  }
  auto sol = solve_linear(system, rhs);
  if (!sol) return std::nullopt;
  LieElement f = LieElement::from_vector(rs, sol->particular);
  if (!(bracket(rs, h, e) == Rat(2) * e) || !(bracket(rs, e, f) == h) || !(bracket(rs, h, f) == Rat(-2) * f)) {
    throw std::logic_error("triple_completion: relations fail after solve");
  }
  return f;
}

ElementOrbit element_orbit(const RootSystem& rs, const LieElement& e) {
  const auto neutral = jm_neutral(rs, e);
  ElementOrbit out;
  if (neutral.zero_orbit) {
    out.orbit.diagrams.push_back({std::vector<int>(rs.rank(), 0)});
    out.dimension = 0;
    return out;
  }
  out.orbit = diagram_from_spectrum(rs, ad_spectrum(rs, neutral.h));
  out.dimension = orbit_dimension(rs, out.orbit.representative());
  return out;
}

OrbitResult associated_orbit(const RootSystem& rs, const Ideal& ideal, std::uint64_t seed, int trials,
                             std::uint64_t coeff_range) {
  const auto samples = sample_generic(rs, ideal, seed, trials, coeff_range);
  std::vector<ElementOrbit> orbits;
  for (const auto& e : samples) orbits.push_back(element_orbit(rs, e));
  OrbitResult res;
  res.samples = static_cast<int>(samples.size());
  const auto best = std::max_element(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return b.orbit < a.orbit;
  });
  res.orbit = best->orbit;
  res.dimension = best->dimension;
  for (const auto& o : orbits)
    if (!(o.orbit == res.orbit)) res.converged = false;
  return res;
}

}  // namespace dynkin
