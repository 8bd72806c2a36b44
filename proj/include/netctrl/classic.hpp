#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netctrl/model.hpp"
#include "netctrl/numalg.hpp"

namespace netctrl {

enum class Confidence { exact, numeric };

const char* to_string(Confidence c);

/// PBH certificate of uncontrollability: alpha (s0 I - Phi) = 0, alpha Psi = 0.
struct Witness {
  Confidence confidence = Confidence::exact;
  Complex s0;
  std::optional<Rational> s0_exact;
  Eigen::RowVectorXcd alpha;
  std::optional<RMatrix> alpha_exact;  // 1 x Nn when confidence is exact
  double residual = 0.0;
};

struct Verdict {
  bool controllable = false;
  std::size_t achieved_rank = 0;
  std::size_t required_rank = 0;
  std::optional<Witness> witness;
  Confidence confidence = Confidence::exact;
  std::string diagnostic;
};

/// [B, AB, ..., A^{n-1} B]. Throws std::invalid_argument on shape mismatch.
RMatrix ctrb_matrix(const RMatrix& A, const RMatrix& B);
std::size_t ctrb_rank(const RMatrix& A, const RMatrix& B);
bool is_controllable(const RMatrix& A, const RMatrix& B);
/// Duality: (A, C) observable iff (A^T, C^T) controllable.
bool is_observable(const RMatrix& A, const RMatrix& C);

/// rank [sI - Phi, Psi], exact.
std::size_t pbh_rank_at(const AssembledSystem& sys, const Rational& s);
/// rank [sI - Phi, Psi] in floating point.
std::size_t pbh_rank_at(const AssembledSystem& sys, Complex s, const NumericTolerance& tol = {});

/// Exact PBH witness at a given rational point, if the rank drops there.
std::optional<Witness> pbh_witness_at(const AssembledSystem& sys, const Rational& s);

/// Left eigenvectors xi with xi (s0 I - A) = 0 and xi B = 0, one per
/// uncontrollable mode of (A, B): exact modes first (descending), then
/// numeric ones whose residual passes tol.
std::vector<Witness> pbh_witnesses(const RMatrix& A, const RMatrix& B, const NumericTolerance& tol = {});

/// One witness per uncontrollable mode: exact modes first (in descending
/// order), then numeric ones that pass the residual check.
std::vector<Witness> extract_witnesses(const AssembledSystem& sys, const NumericTolerance& tol = {});
std::optional<Witness> extract_witness(const AssembledSystem& sys, const NumericTolerance& tol = {});

/// Kalman test on (Phi, Psi); always exact. Attaches a witness when
/// uncontrollable and with_witness is set.
Verdict networked_controllable(const AssembledSystem& sys, const NumericTolerance& tol = {},
                               bool with_witness = true);

/// Kalman test on (L, Delta).
bool pair_controllable_LDelta(const Topology& topo);

}  // namespace netctrl
