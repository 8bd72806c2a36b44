#include "netctrl/classic.hpp"

#include <algorithm>
#include <stdexcept>

#include "netctrl/poly_matrix.hpp"

namespace netctrl {

const char* to_string(Confidence c) { return c == Confidence::exact ? "exact" : "numeric"; }

RMatrix ctrb_matrix(const RMatrix& A, const RMatrix& B) {
  if (!A.is_square()) throw std::invalid_argument("ctrb: A must be square");
  if (B.rows() != A.rows()) throw std::invalid_argument("ctrb: B must have as many rows as A");
  const std::size_t n = A.rows();
  const std::size_t q = B.cols();
  RMatrix K(n, n * q);
  RMatrix block = B;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) block = A * block;
    K.set_block(0, k * q, block);
  }
  return K;
}

std::size_t ctrb_rank(const RMatrix& A, const RMatrix& B) { return rat_rank(ctrb_matrix(A, B)); }

bool is_controllable(const RMatrix& A, const RMatrix& B) { return ctrb_rank(A, B) == A.rows(); }

bool is_observable(const RMatrix& A, const RMatrix& C) {
  if (C.cols() != A.rows()) throw std::invalid_argument("observability: C must have as many columns as A");
  return is_controllable(A.transpose(), C.transpose());
}

namespace {

RMatrix pbh_matrix(const AssembledSystem& sys, const Rational& s) {
  const std::size_t n = sys.state_dim();
  return hstack(RMatrix::identity(n) * s - sys.Phi, sys.Psi);
}

Witness exact_witness(const Rational& s0, const RMatrix& alpha, const RMatrix& A, const RMatrix& B) {
  Witness w;
  w.confidence = Confidence::exact;
  w.s0_exact = s0;
  w.s0 = Complex(s0.get_d(), 0.0);
  w.alpha_exact = alpha;
  w.alpha = to_eigen_complex(alpha).row(0);
  w.residual = witness_residual(w.s0, w.alpha, A, B);
  return w;
}

}  // namespace

std::size_t pbh_rank_at(const AssembledSystem& sys, const Rational& s) { return rat_rank(pbh_matrix(sys, s)); }

std::size_t pbh_rank_at(const AssembledSystem& sys, Complex s, const NumericTolerance& tol) {
  const auto n = static_cast<Eigen::Index>(sys.state_dim());
  Eigen::MatrixXcd m(n, n + static_cast<Eigen::Index>(sys.Psi.cols()));
  m.leftCols(n) = s * Eigen::MatrixXcd::Identity(n, n) - to_eigen_complex(sys.Phi);
  m.rightCols(sys.Psi.cols()) = to_eigen_complex(sys.Psi);
  return num_rank(m, tol);
}

std::optional<Witness> pbh_witness_at(const AssembledSystem& sys, const Rational& s) {
  RMatrix null = left_nullspace(pbh_matrix(sys, s));
  if (null.rows() == 0) return std::nullopt;
  return exact_witness(s, null.row(0), sys.Phi, sys.Psi);
}

std::vector<Witness> pbh_witnesses(const RMatrix& A, const RMatrix& B, const NumericTolerance& tol) {
  const RMatrix K = ctrb_matrix(A, B);
  const RMatrix W = left_nullspace(K);
  const std::size_t d = W.rows();
  if (d == 0) return {};

  // rowspace(W) is A-invariant from the right: W A = R W.
  const RMatrix WPhi = W * A;
  const auto cols = pivot_columns(W);
  RMatrix Wp(d, d), WPhip(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      Wp(i, k) = W(i, cols[k]);
      WPhip(i, k) = WPhi(i, cols[k]);
    }
  const RMatrix R = WPhip * inverse(Wp);
  if (!(R * W == WPhi)) throw std::logic_error("uncontrollable subspace is not invariant");

  std::vector<Witness> out;
  const Poly chi = faddeev_leverrier(R).chi;
  RationalRoots split = rational_roots(chi);
  std::vector<Rational> modes = split.roots;
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  std::reverse(modes.begin(), modes.end());
  for (const auto& s0 : modes) {
    RMatrix z = left_nullspace(RMatrix::identity(d) * s0 - R);
    out.push_back(exact_witness(s0, z.row(0) * W, A, B));
  }

  std::vector<Complex> numeric = polynomial_roots(split.quotient);
  std::sort(numeric.begin(), numeric.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  const Eigen::MatrixXcd Rc = to_eigen_complex(R);
  const Eigen::MatrixXcd Wc = to_eigen_complex(W);
  for (const Complex lambda : numeric) {
    Eigen::MatrixXcd pencil = lambda * Eigen::MatrixXcd::Identity(Rc.rows(), Rc.cols()) - Rc;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pencil, Eigen::ComputeFullU);
    Eigen::RowVectorXcd z = svd.matrixU().col(Rc.rows() - 1).adjoint();
    Witness w;
    w.confidence = Confidence::numeric;
    w.s0 = lambda;
    w.alpha = z * Wc;
    w.residual = witness_residual(lambda, w.alpha, A, B);
    if (w.residual <= tol.residual_tol) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Witness> extract_witnesses(const AssembledSystem& sys, const NumericTolerance& tol) {
  return pbh_witnesses(sys.Phi, sys.Psi, tol);
}

std::optional<Witness> extract_witness(const AssembledSystem& sys, const NumericTolerance& tol) {
  auto all = extract_witnesses(sys, tol);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

Verdict networked_controllable(const AssembledSystem& sys, const NumericTolerance& tol, bool with_witness) {
  Verdict v;
  v.required_rank = sys.state_dim();
  v.achieved_rank = ctrb_rank(sys.Phi, sys.Psi);
  v.controllable = v.achieved_rank == v.required_rank;
  if (!v.controllable && with_witness) {
    v.witness = extract_witness(sys, tol);
    if (!v.witness) v.diagnostic = "no witness passed the residual check";
  }
  return v;
}

bool pair_controllable_LDelta(const Topology& topo) { return is_controllable(topo.L, topo.delta_matrix()); }

}  // namespace netctrl
