#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netctrl/classic.hpp"
#include "netctrl/poly_matrix.hpp"
#include "netctrl/structural.hpp"

namespace netctrl {

enum class Status { holds, fails, not_applicable };

const char* to_string(Status s);

struct Evidence {
  std::vector<Rational> roots;        // failing points s, exact
  std::vector<Complex> numeric_points;
  std::optional<Poly> polynomial;     // failing rank-locus polynomial
  std::optional<RMatrix> vector;      // exact certificate vector or matrix
  std::optional<Eigen::MatrixXcd> numeric_vector;
  std::vector<std::size_t> nodes;     // 0-based
  std::vector<std::pair<std::string, Rational>> values;
};

struct ConditionResult {
  std::string id;
  Status status = Status::not_applicable;
  Confidence confidence = Confidence::exact;
  std::optional<Evidence> evidence;
  std::string note;
};

/// Condition identifiers in the order certify() evaluates them.
const std::vector<std::string>& condition_ids();

struct GammaBasis {
  Rational s;
  RMatrix basis1;  // rows span {xi : xi (sI - A) = 0}
  RMatrix basis2;  // rows span {xi : xi (sI - A) = 0, xi B = 0}
};

struct NumericGammaBasis {
  Complex s;
  Eigen::MatrixXcd basis1;
  Eigen::MatrixXcd basis2;
};

GammaBasis gamma_basis(const Rational& s, const NodeSystem& node);
NumericGammaBasis gamma_basis(Complex s, const NodeSystem& node, const NumericTolerance& tol = {});

/// gamma = g / chi = C (sI - A)^{-1} H and eta = h / chi = C (sI - A)^{-1} B.
struct RationalFnData {
  Poly chi;
  Poly g;
  Poly h;
  PolyMatrix c_adj;  // C adj(sI - A), 1 x n
};

/// Throws std::invalid_argument unless the node is SISO.
RationalFnData transfer_data(const NodeSystem& node);

// Necessary conditions.
ConditionResult check_T1(const AssembledSystem& sys);
ConditionResult check_T2(const AssembledSystem& sys);
ConditionResult check_T3(const AssembledSystem& sys);
ConditionResult check_T5(const AssembledSystem& sys);
ConditionResult check_C6(const AssembledSystem& sys);
ConditionResult check_star(const AssembledSystem& sys);

// SISO necessary-and-sufficient battery (|inputs| < N).
ConditionResult check_T8_i(const AssembledSystem& sys);
ConditionResult check_T8_ii(const AssembledSystem& sys);
ConditionResult check_T8_iii(const AssembledSystem& sys, const NumericTolerance& tol = {});
ConditionResult check_T8_iv(const AssembledSystem& sys);
ConditionResult check_T8(const AssembledSystem& sys, const NumericTolerance& tol = {});

// Topology specializations.
ConditionResult check_chain(const AssembledSystem& sys);
ConditionResult check_cycle(const AssembledSystem& sys);

/// Runs one condition by id; throws std::invalid_argument for unknown ids.
ConditionResult check_condition(const AssembledSystem& sys, std::string_view id, const NumericTolerance& tol = {});

struct Certification {
  std::vector<ConditionResult> conditions;
  Verdict direct;
  std::vector<std::string> contradictions;
};

/// Every condition plus the direct Kalman verdict. A failed necessary
/// condition on a controllable system, or a necessary-and-sufficient result
/// that disagrees with the direct test, is reported as a contradiction.
Certification certify(const AssembledSystem& sys, const NumericTolerance& tol = {});

bool is_necessary_condition(std::string_view id);
bool is_characterization(std::string_view id);

}  // namespace netctrl
