#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "netctrl/rmatrix.hpp"

namespace netctrl {

/// One node: x' = A x + H (coupled outputs) + B u, y = C x.
/// A is n x n, B is n x p, C is m x n, H is n x m.
struct NodeSystem {
  RMatrix A;
  RMatrix B;
  RMatrix C;
  RMatrix H;

  std::size_t n() const { return A.rows(); }
  std::size_t p() const { return B.cols(); }
  std::size_t m() const { return C.rows(); }
  bool siso() const { return p() == 1 && m() == 1; }
};

/// L(i, j) is the weight of the edge from node j to node i (0-based storage).
/// delta[i] marks node i as externally driven.
struct Topology {
  RMatrix L;
  std::vector<bool> delta;

  std::size_t N() const { return L.rows(); }
  /// Driven nodes, 0-based and ascending.
  std::vector<std::size_t> inputs() const;
  RMatrix delta_matrix() const;
};

struct Diagnostic {
  std::string code;     // e.g. "nonzero diagonal", "H/C mismatch"
  std::string message;  // human-readable, 1-based node labels
};

class ModelError : public std::invalid_argument {
 public:
  explicit ModelError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Empty when the pair is a valid networked system.
std::vector<Diagnostic> validate(const NodeSystem& node, const Topology& topo);

struct AssembledSystem {
  NodeSystem node;
  Topology topo;
  RMatrix Phi;  // I_N (x) A + L (x) HC
  RMatrix Psi;  // Delta (x) B

  std::size_t state_dim() const { return Phi.rows(); }
};

/// Throws ModelError carrying every diagnostic from validate().
AssembledSystem assemble(const NodeSystem& node, const Topology& topo);

}  // namespace netctrl
