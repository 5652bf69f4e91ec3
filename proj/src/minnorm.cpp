#include "dynkin/minnorm.hpp"

#include <algorithm>

namespace dynkin {

namespace {

// Dense rational tableau for: minimize c.y, a y = b, y >= 0.
class Tableau {
 public:
  Tableau(const RatMat& a, const RatVec& b) : m_(a.rows()), n_(a.cols()) {
    rows_.assign(m_, std::vector<Rat>(n_ + m_ + 1));
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rat(-a(i, j)) : a(i, j);
      rows_[i][n_ + i] = 1;  // artificial
      rows_[i][n_ + m_] = flip ? Rat(-b[i]) : b[i];
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    allowed_.assign(n_ + m_, true);
  }

  std::size_t rhs_col() const { return n_ + m_; }

  // Runs the simplex for cost vector `cost` (over all n_ + m_ columns).
  // Returns false when unbounded.
  bool optimize(const std::vector<Rat>& cost) {
    while (true) {
      // Reduced costs: cost_j - cost_B . column_j.
      int entering = -1;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (!allowed_[j] || is_basic(j)) continue;
        Rat reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (sgn(rows_[i][j]) != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        if (sgn(reduced) < 0) {
          entering = static_cast<int>(j);
          break;
        }
      }
      if (entering < 0) return true;
      int leave = -1;
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& coef = rows_[i][entering];
        if (sgn(coef) <= 0) continue;
        const Rat ratio = rows_[i][rhs_col()] / coef;
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rat piv = rows_[r][c];
    for (auto& v : rows_[r]) v /= piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      const Rat f = rows_[i][c];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  // After phase 1: pivot artificials out of the basis or drop redundant rows,
  // then forbid artificial columns.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      int col = -1;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(rows_[i][j]) != 0) {
          col = static_cast<int>(j);
          break;
        }
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
    for (std::size_t j = n_; j < n_ + m_; ++j) allowed_[j] = false;
  }

  RatVec solution() const {
    RatVec y(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) y[basis_[i]] = rows_[i][rhs_col()];
    return y;
  }

  Rat artificial_sum() const {
    Rat s = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] >= n_) s += rows_[i][rhs_col()];
    return s;
  }

 private:
  bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

  std::size_t m_, n_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

StandardLpResult solve_standard_lp(const RatMat& a, const RatVec& b, const RatVec& c) {
  if (a.rows() != b.dim() || a.cols() != c.dim()) throw std::invalid_argument("solve_standard_lp: shape mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  Tableau t(a, b);
  std::vector<Rat> phase1(n + m);
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = 1;
  t.optimize(phase1);
  StandardLpResult res;
  if (sgn(t.artificial_sum()) != 0) {
    res.status = LpStatus::kInfeasible;
    return res;
  }
  t.expel_artificials();
  std::vector<Rat> phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!t.optimize(phase2)) {
    res.status = LpStatus::kUnbounded;
    return res;
  }
  res.status = LpStatus::kOptimal;
  res.solution = t.solution();
  res.value = dot(c, res.solution);
  return res;
}

namespace {

// x = u - v; one slack per constraint. Columns: u (d), v (d), s (m).
struct PolyLp {
  RatMat a;
  RatVec b;
};

PolyLp to_standard(const Polyhedron& p) {
  const std::size_t d = p.dim, m = p.constraints.size();
  PolyLp lp{RatMat(m, 2 * d + m), RatVec(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = p.constraints[i];
    for (std::size_t j = 0; j < d; ++j) {
      lp.a(i, j) = c.normal[j];
      lp.a(i, d + j) = -c.normal[j];
    }
    lp.a(i, 2 * d + i) = c.sense == Sense::kGreaterEq ? -1 : 1;
    lp.b[i] = c.bound;
  }
  return lp;
}

RatVec recover_x(const RatVec& y, std::size_t d) {
  RatVec x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = y[j] - y[d + j];
  return x;
}

}  // namespace

bool verify_farkas(const Polyhedron& p, const RatVec& y) {
  if (y.dim() != p.constraints.size()) return false;
  RatVec combo(p.dim);
  Rat rhs = 0;
  for (std::size_t i = 0; i < y.dim(); ++i) {
    if (sgn(y[i]) < 0) return false;
    combo += y[i] * p.constraints[i].signed_normal();
    rhs += y[i] * p.constraints[i].signed_bound();
  }
  return combo.is_zero() && sgn(rhs) > 0;
}

FeasibilityResult feasible_point(const Polyhedron& p) {
  FeasibilityResult res;
  const std::size_t d = p.dim, m = p.constraints.size();
  if (m == 0) {
    res.feasible = true;
    res.point = RatVec(d);
    return res;
  }
  const PolyLp lp = to_standard(p);
  const auto out = solve_standard_lp(lp.a, lp.b, RatVec(lp.a.cols()));
  if (out.status == LpStatus::kOptimal) {
    res.feasible = true;
    res.point = recover_x(out.solution, d);
    if (!p.contains(res.point)) throw std::logic_error("feasible_point: simplex returned an infeasible point");
    return res;
  }
  // Farkas system: y >= 0, sum y_i n_i = 0, sum y_i b_i = 1.
  RatMat a(d + 1, m);
  RatVec b(d + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const RatVec sn = p.constraints[i].signed_normal();
    for (std::size_t j = 0; j < d; ++j) a(j, i) = sn[j];
    a(d, i) = p.constraints[i].signed_bound();
  }
  b[d] = 1;
  const auto cert = solve_standard_lp(a, b, RatVec(m));
  if (cert.status != LpStatus::kOptimal) throw std::logic_error("feasible_point: neither a point nor a Farkas certificate");
  res.feasible = false;
  res.farkas = cert.solution;
  return res;
}

PolyLpResult lp_minimize(const Polyhedron& p, const RatVec& objective) {
  const std::size_t d = p.dim, m = p.constraints.size();
  const PolyLp lp = to_standard(p);
  RatVec c(2 * d + m);
  for (std::size_t j = 0; j < d; ++j) {
    c[j] = objective[j];
    c[d + j] = -objective[j];
  }
  const auto out = solve_standard_lp(lp.a, lp.b, c);
  PolyLpResult res;
  res.status = out.status;
  if (out.status == LpStatus::kOptimal) {
    res.point = recover_x(out.solution, d);
    res.value = dot(objective, res.point);
  }
  return res;
}

namespace {

struct EqualityQp {
  RatVec x;
  RatVec lambda;
};

// minimize 1/2 x^T G x subject to n_i . x = b_i for i in the working set.
EqualityQp solve_equality_qp(const Polyhedron& p, const RatMat& gram, const std::vector<int>& work) {
  const std::size_t d = p.dim, k = work.size();
  RatMat kkt(d + k, d + k);
  RatVec rhs(d + k);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) kkt(i, j) = gram(i, j);
  for (std::size_t w = 0; w < k; ++w) {
    const auto& c = p.constraints[work[w]];
    const RatVec sn = c.signed_normal();
    for (std::size_t j = 0; j < d; ++j) {
      kkt(j, d + w) = -sn[j];
      kkt(d + w, j) = sn[j];
    }
    rhs[d + w] = c.signed_bound();
  }
  auto sol = solve_linear(kkt, rhs);
  if (!sol || !sol->kernel.empty()) throw std::logic_error("active set: singular KKT system");
  EqualityQp out{RatVec(d), RatVec(k)};
  for (std::size_t j = 0; j < d; ++j) out.x[j] = sol->particular[j];
  for (std::size_t w = 0; w < k; ++w) out.lambda[w] = sol->particular[d + w];
  return out;
}

bool independent_of(const Polyhedron& p, const std::vector<int>& work, int candidate) {
  RatMat m(work.size() + 1, p.dim);
  for (std::size_t w = 0; w <= work.size(); ++w) {
    const int idx = w < work.size() ? work[w] : candidate;
    for (int j = 0; j < p.dim; ++j) m(w, j) = p.constraints[idx].normal[j];
  }
  return rank(m) == work.size() + 1;
}

}  // namespace

MinNormCertificate min_norm_point(const Polyhedron& p, const RatMat& gram) {
  if (!gram.is_square() || static_cast<int>(gram.rows()) != p.dim) throw std::invalid_argument("min_norm_point: Gram shape");
  const auto start = feasible_point(p);
  if (!start.feasible) throw InfeasiblePolyhedron("min_norm_point: polyhedron is empty", start.farkas);

  RatVec x = start.point;
  std::vector<int> work;
  for (int i = 0; i < static_cast<int>(p.constraints.size()); ++i)
    if (p.constraints[i].tight(x) && independent_of(p, work, i)) work.push_back(i);

  const int max_iterations = 100000;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    const EqualityQp eq = solve_equality_qp(p, gram, work);
    if (eq.x == x) {
      int drop = -1;
      for (std::size_t w = 0; w < work.size(); ++w)
        if (sgn(eq.lambda[w]) < 0 && (drop < 0 || work[w] < work[drop])) drop = static_cast<int>(w);
      if (drop < 0) {
        MinNormCertificate cert;
        std::vector<std::size_t> order(work.size());
        for (std::size_t w = 0; w < order.size(); ++w) order[w] = w;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return work[a] < work[b]; });
        cert.minimizer = x;
        cert.multipliers = RatVec(work.size());
        for (std::size_t w = 0; w < order.size(); ++w) {
          cert.active_set.push_back(work[order[w]]);
          cert.multipliers[w] = eq.lambda[order[w]];
        }
        cert.norm_squared = quadratic_form(gram, x);
        cert.iterations = iter;
        return cert;
      }
      work.erase(work.begin() + drop);
      continue;
    }
    const RatVec step = eq.x - x;
    Rat t = 1;
    int blocking = -1;
    for (int i = 0; i < static_cast<int>(p.constraints.size()); ++i) {
      if (std::find(work.begin(), work.end(), i) != work.end()) continue;
      const auto& c = p.constraints[i];
      const RatVec sn = c.signed_normal();
      const Rat rate = dot(sn, step);
      if (sgn(rate) >= 0) continue;
      const Rat ti = (c.signed_bound() - dot(sn, x)) / rate;
      if (ti < t) {  // ascending scan keeps the least index on ties
        t = ti;
        blocking = i;
      }
    }
    x += t * step;
    if (blocking >= 0) work.push_back(blocking);
  }
  throw std::logic_error("min_norm_point: active-set iteration limit reached");
}

CertificateCheck verify_certificate(const Polyhedron& p, const RatMat& gram, const MinNormCertificate& c) {
  const auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (static_cast<int>(c.minimizer.dim()) != p.dim) return fail("minimizer has the wrong dimension");
  if (c.multipliers.dim() != c.active_set.size()) return fail("one multiplier per active constraint required");
  for (std::size_t i = 0; i < p.constraints.size(); ++i)
    if (!p.constraints[i].satisfied(c.minimizer)) return fail("constraint " + std::to_string(i) + " violated");
  RatVec combo(p.dim);
  for (std::size_t w = 0; w < c.active_set.size(); ++w) {
    const int idx = c.active_set[w];
    if (idx < 0 || idx >= static_cast<int>(p.constraints.size())) return fail("active index out of range");
    if (w > 0 && c.active_set[w - 1] >= idx) return fail("active set not strictly ascending");
    if (!p.constraints[idx].tight(c.minimizer)) return fail("active constraint " + std::to_string(idx) + " not tight");
    if (sgn(c.multipliers[w]) < 0) return fail("negative multiplier on constraint " + std::to_string(idx));
    combo += c.multipliers[w] * p.constraints[idx].signed_normal();
  }
  if (!(gram * c.minimizer == combo)) return fail("stationarity fails");
  if (quadratic_form(gram, c.minimizer) != c.norm_squared) return fail("reported norm does not match minimizer");
  return {true, ""};
}

}  // namespace dynkin
