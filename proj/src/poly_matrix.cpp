#include "netctrl/poly_matrix.hpp"

#include <stdexcept>

namespace netctrl {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

PolyMatrix::PolyMatrix(const RMatrix& m) : PolyMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Poly::constant(m(i, j));
}

PolyMatrix PolyMatrix::pencil(const RMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("pencil of a non-square matrix");
  PolyMatrix p(-1 * a);
  for (std::size_t i = 0; i < a.rows(); ++i) p(i, i) += Poly::monomial(1, 1);
  return p;
}

RMatrix PolyMatrix::eval(const Rational& s) const {
  RMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(s);
  return m;
}

bool PolyMatrix::is_zero_column(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("poly matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("poly matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Poly& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("poly matrix product shape mismatch");
  PolyMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  PolyMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(1);
  PolyMatrix w = m;
  Poly prev = Poly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && w(p, k).is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = w(k, k) * w(i, j) - w(i, k) * w(k, j);
        w(i, j) = divmod(num, prev).first;
      }
      w(i, k) = Poly{};
    }
    prev = w(k, k);
  }
  Poly det = w(n - 1, n - 1);
  return negate ? -det : det;
}

CharPolyAdjugate faddeev_leverrier(const RMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("faddeev_leverrier requires a square matrix");
  const std::size_t n = a.rows();
  // chi(s) = s^n + c_1 s^{n-1} + ... + c_n, adj(sI - A) = sum_k N_k s^{n-1-k}
  std::vector<Rational> chi(n + 1);
  chi[n] = 1;
  PolyMatrix adj(n, n);
  RMatrix nk = RMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      RMatrix anp = a * nk;
      Rational ck = -anp.trace() / static_cast<unsigned long>(k);
      chi[n - k] = ck;
      nk = anp + RMatrix::identity(n) * ck;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (nk(i, j) != 0) adj(i, j) += Poly::monomial(nk(i, j), n - 1 - k);
  }
  if (n > 0) chi[0] = -(a * nk).trace() / static_cast<unsigned long>(n);
  return {Poly(std::move(chi)), std::move(adj)};
}

Poly rank_locus(const PolyMatrix& m, const Poly& chi) {
  const std::size_t r = m.rows();
  if (r > m.cols()) throw std::invalid_argument("rank_locus requires rows <= cols");
  if (r == 0) return Poly::constant(1);

  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.is_zero_column(j)) live.push_back(j);
  if (live.size() < r) return {};

  std::vector<std::size_t> pick(r);
  for (std::size_t k = 0; k < r; ++k) pick[k] = k;
  Poly g;
  PolyMatrix minor(r, r);
  for (;;) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) minor(i, k) = m(i, live[pick[k]]);
    Poly det = determinant(minor);
    if (!det.is_zero()) {
      Poly next = poly_gcd(g, det);
      if (g.is_zero() || next.degree() < g.degree()) {
        g = std::move(next);
        if (strip_factors(g, chi).degree() == 0) return Poly::constant(1);
      }
    }
    // next combination in lexicographic order
    std::size_t k = r;
    while (k > 0 && pick[k - 1] == live.size() - r + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t t = k; t < r; ++t) pick[t] = pick[t - 1] + 1;
  }
  if (g.is_zero()) return {};
  return strip_factors(g, chi);
}

}  // namespace netctrl
