#pragma once

#include <cstddef>
#include <vector>

#include "netctrl/poly.hpp"
#include "netctrl/rmatrix.hpp"

namespace netctrl {

/// Dense row-major matrix over Q[s].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  /// The constant matrix m.
  explicit PolyMatrix(const RMatrix& m);

  /// s I - a
  static PolyMatrix pencil(const RMatrix& a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RMatrix eval(const Rational& s) const;
  bool is_zero_column(std::size_t j) const;

  PolyMatrix& operator+=(const PolyMatrix& rhs);
  PolyMatrix& operator-=(const PolyMatrix& rhs);
  PolyMatrix& operator*=(const Poly& c);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(PolyMatrix a, const Poly& c) { return a *= c; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);

/// Determinant by fraction-free elimination over Q[s].
Poly determinant(const PolyMatrix& m);

struct CharPolyAdjugate {
  Poly chi;              // det(sI - A), monic of degree n
  PolyMatrix adjugate;   // adj(sI - A)
};

/// Faddeev-LeVerrier recursion; (sI - A) adj = chi I. Throws for non-square A.
CharPolyAdjugate faddeev_leverrier(const RMatrix& a);

/// Monic gcd of all maximal (rows x rows) minors with every factor shared
/// with chi removed. Requires rows <= cols. Zero columns are skipped; the
/// zero polynomial means the rank is deficient for every s. Stops early once
/// the stripped gcd reaches a constant.
Poly rank_locus(const PolyMatrix& m, const Poly& chi);

}  // namespace netctrl
