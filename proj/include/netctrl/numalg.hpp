#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "netctrl/poly.hpp"
#include "netctrl/rmatrix.hpp"

namespace netctrl {

using Complex = std::complex<double>;

struct NumericTolerance {
  double rank_tol = 1e-9;      // relative to the largest singular value
  double residual_tol = 1e-8;  // for witness residual checks

  /// Throws std::invalid_argument unless both tolerances are finite and > 0.
  void validate() const;
};

struct SpectrumReport {
  Poly chi;
  std::vector<Rational> exact_roots;   // with multiplicity, ascending
  std::vector<Complex> numeric_roots;  // roots of the irrational remainder
  bool fully_exact = true;
};

Eigen::MatrixXd to_eigen(const RMatrix& m);
Eigen::MatrixXcd to_eigen_complex(const RMatrix& m);

/// Number of singular values above rank_tol times the largest one. Throws
/// std::invalid_argument for NaN or infinite entries.
std::size_t num_rank(const Eigen::MatrixXd& m, const NumericTolerance& tol = {});
std::size_t num_rank(const Eigen::MatrixXcd& m, const NumericTolerance& tol = {});

/// Orthonormal rows spanning {v : v M ~ 0}.
Eigen::MatrixXcd numeric_left_nullspace(const Eigen::MatrixXcd& m, const NumericTolerance& tol = {});

/// All complex roots of p (companion-matrix eigenvalues); empty for constants.
std::vector<Complex> polynomial_roots(const Poly& p);

/// Rational eigenvalues exactly, the remainder numerically.
SpectrumReport spectrum(const RMatrix& a);

/// max(|alpha (s0 I - Phi)|_inf, |alpha Psi|_inf) / |alpha|_inf. Throws
/// std::invalid_argument for a zero alpha or mismatched dimensions.
double witness_residual(Complex s0, const Eigen::RowVectorXcd& alpha, const RMatrix& phi, const RMatrix& psi);

}  // namespace netctrl
