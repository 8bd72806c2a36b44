#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "netctrl/rational.hpp"

namespace netctrl {

/// Dense row-major matrix of rationals.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix zero(std::size_t rows, std::size_t cols) { return RMatrix(rows, cols); }
  static RMatrix diagonal(const std::vector<Rational>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RMatrix transpose() const;
  RMatrix row(std::size_t i) const;
  RMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RMatrix& b);
  Rational trace() const;

  RMatrix& operator+=(const RMatrix& rhs);
  RMatrix& operator-=(const RMatrix& rhs);
  RMatrix& operator*=(const Rational& c);
  friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
  friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
  friend RMatrix operator*(RMatrix a, const Rational& c) { return a *= c; }
  friend RMatrix operator*(const Rational& c, RMatrix a) { return a *= c; }
  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RMatrix kron(const RMatrix& a, const RMatrix& b);
RMatrix hstack(const RMatrix& a, const RMatrix& b);
RMatrix vstack(const RMatrix& a, const RMatrix& b);

/// Rank over Q by fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rat_rank(const RMatrix& m);

/// Rows form a basis of {v : v M = 0}; zero rows when M has full row rank.
RMatrix left_nullspace(const RMatrix& m);

/// Rows form a basis of {x : M x = 0}, returned as row vectors.
RMatrix right_nullspace(const RMatrix& m);

/// Throws std::domain_error when singular or non-square.
RMatrix inverse(const RMatrix& m);

/// Indices of a maximal set of linearly independent columns, leftmost first.
std::vector<std::size_t> pivot_columns(const RMatrix& m);

}  // namespace netctrl
