#include "netctrl/numalg.hpp"

#include "netctrl/poly_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace netctrl {

void NumericTolerance::validate() const {
  if (!(std::isfinite(rank_tol) && rank_tol > 0.0) || !(std::isfinite(residual_tol) && residual_tol > 0.0)) {
    throw std::invalid_argument("tolerances must be finite and strictly positive");
  }
}

Eigen::MatrixXd to_eigen(const RMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

Eigen::MatrixXcd to_eigen_complex(const RMatrix& m) { return to_eigen(m).cast<Complex>(); }

namespace {

template <typename Derived>
std::size_t rank_from_singular_values(const Eigen::MatrixBase<Derived>& sv, double rank_tol) {
  if (sv.size() == 0) return 0;
  const double largest = sv(0);
  if (largest == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * largest) ++r;
  return r;
}

template <typename M>
void require_finite(const M& m) {
  if (!m.allFinite()) throw std::invalid_argument("matrix has NaN or infinite entries");
}

}  // namespace

std::size_t num_rank(const Eigen::MatrixXd& m, const NumericTolerance& tol) {
  require_finite(m);
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return rank_from_singular_values(svd.singularValues(), tol.rank_tol);
}

std::size_t num_rank(const Eigen::MatrixXcd& m, const NumericTolerance& tol) {
  require_finite(m);
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return rank_from_singular_values(svd.singularValues(), tol.rank_tol);
}

Eigen::MatrixXcd numeric_left_nullspace(const Eigen::MatrixXcd& m, const NumericTolerance& tol) {
  require_finite(m);
  const Eigen::Index rows = m.rows();
  if (m.cols() == 0) return Eigen::MatrixXcd::Identity(rows, rows);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU);
  const auto r = static_cast<Eigen::Index>(rank_from_singular_values(svd.singularValues(), tol.rank_tol));
  // u^H M = 0 for the trailing left singular vectors.
  return svd.matrixU().rightCols(rows - r).adjoint();
}

std::vector<Complex> polynomial_roots(const Poly& p) {
  if (p.degree() <= 0) return {};
  const auto deg = static_cast<Eigen::Index>(p.degree());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  const Rational& lead = p.leading();
  for (Eigen::Index i = 0; i < deg; ++i) {
    companion(0, deg - 1 - i) = -Rational(p.coeffs()[static_cast<std::size_t>(i)] / lead).get_d();
    if (i + 1 < deg) companion(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  return roots;
}

SpectrumReport spectrum(const RMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("spectrum of a non-square matrix");
  SpectrumReport report;
  report.chi = faddeev_leverrier(a).chi;
  RationalRoots split = rational_roots(report.chi);
  report.exact_roots = std::move(split.roots);
  report.numeric_roots = polynomial_roots(split.quotient);
  report.fully_exact = report.numeric_roots.empty();
  return report;
}

double witness_residual(Complex s0, const Eigen::RowVectorXcd& alpha, const RMatrix& phi, const RMatrix& psi) {
  const auto n = static_cast<Eigen::Index>(phi.rows());
  if (alpha.size() != n || phi.cols() != phi.rows() || psi.rows() != phi.rows()) {
    throw std::invalid_argument("witness dimensions do not match the system");
  }
  const double scale = alpha.cwiseAbs().maxCoeff();
  if (scale == 0.0) throw std::invalid_argument("witness vector is zero");
  Eigen::MatrixXcd pencil = s0 * Eigen::MatrixXcd::Identity(n, n) - to_eigen_complex(phi);
  double r = (alpha * pencil).cwiseAbs().maxCoeff();
  if (psi.cols() > 0) r = std::max(r, (alpha * to_eigen_complex(psi)).cwiseAbs().maxCoeff());
  return r / scale;
}

}  // namespace netctrl
