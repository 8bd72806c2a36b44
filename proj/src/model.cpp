#include "netctrl/model.hpp"

#include <sstream>

namespace netctrl {

std::vector<std::size_t> Topology::inputs() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i]) out.push_back(i);
  return out;
}

RMatrix Topology::delta_matrix() const {
  RMatrix d(delta.size(), delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i]) d(i, i) = 1;
  return d;
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& diags) {
  std::ostringstream os;
  os << "invalid networked system";
  for (const auto& d : diags) os << "; " << d.code << ": " << d.message;
  return os.str();
}

std::string shape(const RMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

ModelError::ModelError(std::vector<Diagnostic> diagnostics)
    : std::invalid_argument(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<Diagnostic> validate(const NodeSystem& node, const Topology& topo) {
  std::vector<Diagnostic> out;
  auto fail = [&](std::string code, std::string message) { out.push_back({std::move(code), std::move(message)}); };

  const std::size_t n = node.A.rows();
  if (!node.A.is_square()) fail("A not square", "A is " + shape(node.A));
  if (n == 0) fail("empty node", "node state dimension must be at least 1");
  if (node.B.cols() == 0) fail("empty input", "B must have at least one column");
  if (node.C.rows() == 0) fail("empty output", "C must have at least one row");
  if (node.B.rows() != n) fail("B/A mismatch", "B is " + shape(node.B) + " but A has " + std::to_string(n) + " rows");
  if (node.C.cols() != n) fail("C/A mismatch", "C is " + shape(node.C) + " but A has " + std::to_string(n) + " columns");
  if (node.H.rows() != n) fail("H/A mismatch", "H is " + shape(node.H) + " but A has " + std::to_string(n) + " rows");
  if (node.H.cols() != node.C.rows())
    fail("H/C mismatch", "H is " + shape(node.H) + " but C has " + std::to_string(node.C.rows()) + " rows");

  const std::size_t N = topo.L.rows();
  if (!topo.L.is_square()) fail("L not square", "L is " + shape(topo.L));
  if (N < 2) fail("too few nodes", "a networked system needs N >= 2, got " + std::to_string(N));
  if (topo.delta.size() != N)
    fail("delta length", "delta has " + std::to_string(topo.delta.size()) + " entries for N = " + std::to_string(N));
  if (topo.L.is_square()) {
    for (std::size_t i = 0; i < N; ++i)
      if (topo.L(i, i) != 0)
        fail("nonzero diagonal", "beta(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")" + " = " + to_string(topo.L(i, i)));
  }
  return out;
}

AssembledSystem assemble(const NodeSystem& node, const Topology& topo) {
  if (auto diags = validate(node, topo); !diags.empty()) throw ModelError(std::move(diags));
  AssembledSystem sys{node, topo, {}, {}};
  const RMatrix hc = node.H * node.C;
  sys.Phi = kron(RMatrix::identity(topo.N()), node.A) + kron(topo.L, hc);
  sys.Psi = kron(topo.delta_matrix(), node.B);
  return sys;
}

}  // namespace netctrl
