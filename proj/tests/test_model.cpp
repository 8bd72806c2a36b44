#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "netctrl/classic.hpp"
#include "support.hpp"

using namespace netctrl;

namespace {

NodeSystem siso_node() { return {{{1, 0}, {1, 1}}, {{1}, {0}}, {{1, 0}}, {{0}, {1}}}; }

Topology pair_cycle() {
  Topology t{RMatrix{{0, 1}, {1, 0}}, {true, false}};
  return t;
}

bool has_code(const std::vector<Diagnostic>& d, const std::string& code) {
  return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) { return x.code == code; });
}

}  // namespace

TEST_CASE("validate accepts a well-formed system") { CHECK(validate(siso_node(), pair_cycle()).empty()); }

TEST_CASE("validate diagnostics") {
  Topology t = pair_cycle();
  t.L(0, 0) = 1;
  auto d = validate(siso_node(), t);
  REQUIRE(has_code(d, "nonzero diagonal"));
  CHECK(d.front().message.find("beta(1,1)") != std::string::npos);

  NodeSystem n = siso_node();
  n.H = RMatrix(2, 2);
  CHECK(has_code(validate(n, pair_cycle()), "H/C mismatch"));

  n = siso_node();
  n.A = RMatrix(2, 3);
  CHECK(has_code(validate(n, pair_cycle()), "A not square"));

  n = siso_node();
  n.B = RMatrix(3, 1);
  CHECK(has_code(validate(n, pair_cycle()), "B/A mismatch"));

  n = siso_node();
  n.C = RMatrix(1, 3);
  CHECK(has_code(validate(n, pair_cycle()), "C/A mismatch"));

  t = pair_cycle();
  t.delta = {true};
  CHECK(has_code(validate(siso_node(), t), "delta length"));

  t = Topology{RMatrix(1, 1), {true}};
  CHECK(has_code(validate(siso_node(), t), "too few nodes"));

  t = Topology{RMatrix(2, 3), {true, false}};
  CHECK(has_code(validate(siso_node(), t), "L not square"));

  try {
    Topology bad = pair_cycle();
    bad.L(1, 1) = 2;
    assemble(siso_node(), bad);
    FAIL("assemble accepted an invalid topology");
  } catch (const ModelError& e) {
    CHECK(has_code(e.diagnostics(), "nonzero diagonal"));
  }
}

TEST_CASE("assembly matches the Kronecker definition") {
  const AssembledSystem sys = assemble(siso_node(), pair_cycle());
  const RMatrix hc = sys.node.H * sys.node.C;
  CHECK(sys.Phi == kron(RMatrix::identity(2), sys.node.A) + kron(sys.topo.L, hc));
  CHECK(sys.Psi == kron(sys.topo.delta_matrix(), sys.node.B));
  CHECK(sys.state_dim() == 4);
  CHECK(sys.Psi.cols() == 2);
}

TEST_CASE("no coupling gives a block-diagonal Phi") {
  Topology t{RMatrix(3, 3), {true, false, false}};
  const AssembledSystem sys = assemble(siso_node(), t);
  CHECK(sys.Phi == kron(RMatrix::identity(3), sys.node.A));
}

TEST_CASE("chain gives a lower block-bidiagonal Phi") {
  Topology t{RMatrix(3, 3), {true, false, false}};
  t.L(1, 0) = 2;
  t.L(2, 1) = 3;
  const AssembledSystem sys = assemble(siso_node(), t);
  const RMatrix hc = sys.node.H * sys.node.C;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const RMatrix blk = sys.Phi.block(2 * i, 2 * j, 2, 2);
      if (i == j) CHECK(blk == sys.node.A);
      else if (i == j + 1) CHECK(blk == hc * t.L(i, j));
      else CHECK(blk.is_zero());
    }
}

TEST_CASE("relabeling nodes permutes Phi and keeps the rank") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t N = 4, n = 2;
    const NodeSystem node = testsupport::random_node(rng, n, 1, 1);
    const Topology t = testsupport::random_topology(rng, N, 0.5);
    std::vector<std::size_t> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Topology u{RMatrix(N, N), std::vector<bool>(N)};
    for (std::size_t i = 0; i < N; ++i) {
      u.delta[perm[i]] = t.delta[i];
      for (std::size_t j = 0; j < N; ++j) u.L(perm[i], perm[j]) = t.L(i, j);
    }
    const AssembledSystem a = assemble(node, t), b = assemble(node, u);
    RMatrix P(N, N);
    for (std::size_t i = 0; i < N; ++i) P(perm[i], i) = 1;
    const RMatrix Pn = kron(P, RMatrix::identity(n));
    CHECK(b.Phi == Pn * a.Phi * Pn.transpose());
    CHECK(ctrb_rank(a.Phi, a.Psi) == ctrb_rank(b.Phi, b.Psi));
  }
}
