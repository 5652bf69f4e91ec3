#include "dynkin/exactlin.hpp"

#include <stdexcept>

namespace dynkin {

Rat parse_rat(const std::string& text) {
  Rat value;
  if (value.set_str(text, 10) != 0 || value.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) { return value.get_str(); }

RatVec RatVec::from_ints(const std::vector<int>& values) {
  RatVec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return v;
}

bool RatVec::is_zero() const {
  for (const auto& x : entries_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RatVec& RatVec::operator+=(const RatVec& other) {
  if (other.dim() != dim()) throw std::invalid_argument("RatVec dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& other) {
  if (other.dim() != dim()) throw std::invalid_argument("RatVec dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rat& scale) {
  for (auto& x : entries_) x *= scale;
  return *this;
}

RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
RatVec operator*(const Rat& s, RatVec v) { return v *= s; }

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_ints(const std::vector<std::vector<int>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  RatMat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVec RatMat::row(std::size_t r) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
  return v;
}

RatVec RatMat::col(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

bool RatMat::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool RatMat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RatMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatVec operator*(const RatMat& a, const RatVec& x) {
  if (a.cols() != x.dim()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  RatVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  RatMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RatMat operator*(const Rat& s, const RatMat& a) {
  RatMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Int common_denominator(const std::vector<Rat>& values) {
  Int l = 1;
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

namespace {

using IntRows = std::vector<std::vector<Int>>;

// Each row scaled to integers; row scaling preserves rank and solutions.
IntRows integer_rows(const RatMat& a, const RatVec* rhs) {
  const std::size_t width = a.cols() + (rhs ? 1 : 0);
  IntRows out(a.rows(), std::vector<Int>(width));
  std::vector<Rat> row(width);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
    if (rhs) row[a.cols()] = (*rhs)[i];
    const Int den = common_denominator(row);
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(row[j]) == 0) continue;
      out[i][j] = row[j].get_num() * (den / row[j].get_den());
    }
  }
  return out;
}

// Fraction-free row echelon form in place. Returns pivot columns, one per
// nonzero row (rows 0..pivots.size()-1). Only the first `limit` columns are
// eligible as pivots.
std::vector<std::size_t> bareiss_echelon(IntRows& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  const std::size_t nrows = m.size();
  if (nrows == 0) return pivots;
  const std::size_t ncols = m.front().size();
  Int prev = 1;
  Int tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(m[p][c]) == 0) ++p;
    if (p == nrows) continue;
    if (p != r) std::swap(m[p], m[r]);
    const Int& piv = m[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Int lead = m[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        tmp = m[i][j] * piv;
        if (sgn(lead) != 0 && sgn(m[r][j]) != 0) tmp -= lead * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    // Rows above the pivot row keep their values; only rows below change.
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntRows rows = integer_rows(m, nullptr);
  return bareiss_echelon(rows, m.cols()).size();
}

std::size_t kernel_dimension(const RatMat& m) {
  if (!m.is_square()) throw std::invalid_argument("kernel_dimension: matrix must be square");
  return m.cols() - rank(m);
}

std::optional<LinearSolution> solve_linear(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.dim()) throw std::invalid_argument("solve_linear: a.rows != b.dim");
  const std::size_t n = a.cols();
  IntRows rows = integer_rows(a, &b);
  const auto pivots = bareiss_echelon(rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  std::vector<int> pivot_row(n, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);

  // Back substitution for rhs column `rhs_col` (or the homogeneous system
  // with free variable `free_var` set to one).
  auto back_substitute = [&](bool homogeneous, std::size_t free_var) {
    RatVec x(n);
    if (homogeneous) x[free_var] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t c = pivots[k];
      const auto& row = rows[k];
      Rat acc = homogeneous ? Rat(0) : Rat(row[n]);
      for (std::size_t j = c + 1; j < n; ++j) {
        if (sgn(row[j]) != 0 && sgn(x[j]) != 0) acc -= Rat(row[j]) * x[j];
      }
      x[c] = acc / Rat(row[c]);
    }
    return x;
  };

  LinearSolution sol;
  sol.particular = back_substitute(false, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_row[j] < 0) sol.kernel.push_back(back_substitute(true, j));
  }
  return sol;
}

RatMat inverse(const RatMat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix must be square");
  const std::size_t n = m.rows();
  RatMat inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec e(n);
    e[j] = 1;
    auto sol = solve_linear(m, e);
    if (!sol || !sol->kernel.empty()) throw std::invalid_argument("inverse: matrix is singular");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = sol->particular[i];
  }
  return inv;
}

Rat quadratic_form(const RatMat& g, const RatVec& x) { return dot(x, g * x); }

}  // namespace dynkin
