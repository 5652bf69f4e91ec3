#pragma once

// Exact rational scalars, dense vectors and matrices.
//
// Every quantity in the toolkit lives here: chamber coordinates, Gram
// matrices, Lie algebra coefficients, KKT multipliers. Nothing is ever
// rounded; GMP's mpq_class keeps values in lowest terms with a positive
// denominator after every operation.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace dynkin {

using Int = mpz_class;
using Rat = mpq_class;

/// n/d in lowest terms. mpq_class(n, d) alone does not canonicalise.
inline Rat make_rat(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t dim) : entries_(dim) {}
  RatVec(std::initializer_list<Rat> init) : entries_(init) {}
  explicit RatVec(std::vector<Rat> entries) : entries_(std::move(entries)) {}

  static RatVec from_ints(const std::vector<int>& values);

  std::size_t dim() const { return entries_.size(); }
  Rat& operator[](std::size_t i) { return entries_[i]; }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }

  const std::vector<Rat>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

  RatVec& operator+=(const RatVec& other);
  RatVec& operator-=(const RatVec& other);
  RatVec& operator*=(const Rat& scale);

  friend bool operator==(const RatVec& a, const RatVec& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const RatVec& a, const RatVec& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Rat> entries_;
};

RatVec operator+(RatVec a, const RatVec& b);
RatVec operator-(RatVec a, const RatVec& b);
RatVec operator*(const Rat& s, RatVec v);
Rat dot(const RatVec& a, const RatVec& b);
std::string to_string(const RatVec& v);

class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(std::size_t n);
  static RatMat from_ints(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMat transpose() const;
  RatVec row(std::size_t r) const;
  RatVec col(std::size_t c) const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatMat operator*(const RatMat& a, const RatMat& b);
RatVec operator*(const RatMat& a, const RatVec& x);
RatMat operator+(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);
RatMat operator*(const Rat& s, const RatMat& a);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMat& m);

/// cols - rank; the matrix must be square.
std::size_t kernel_dimension(const RatMat& m);

struct LinearSolution {
  RatVec particular;
  std::vector<RatVec> kernel;
};

/// One solution of a·x = b plus a kernel basis, or nullopt when inconsistent.
/// Free variables are set to zero in the particular solution.
std::optional<LinearSolution> solve_linear(const RatMat& a, const RatVec& b);

/// Inverse of a nonsingular square matrix; throws std::invalid_argument otherwise.
RatMat inverse(const RatMat& m);

/// Quadratic form x^T g x.
Rat quadratic_form(const RatMat& g, const RatVec& x);

/// Least common multiple of the denominators of a row, as an integer.
Int common_denominator(const std::vector<Rat>& values);

}  // namespace dynkin
