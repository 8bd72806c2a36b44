#include <doctest.h>

#include <random>

#include "netctrl/classic.hpp"
#include "support.hpp"

using namespace netctrl;

TEST_CASE("Kalman rank on small pairs") {
  const RMatrix A{{1, 0}, {1, 1}};
  CHECK(is_controllable(A, RMatrix{{1}, {0}}));
  CHECK_FALSE(is_controllable(A, RMatrix{{0}, {1}}));
  CHECK(is_observable(A, RMatrix{{0, 1}}));
  CHECK_FALSE(is_observable(A, RMatrix{{1, 0}}));
  CHECK(ctrb_matrix(A, RMatrix{{1}, {0}}) == RMatrix{{1, 1}, {0, 1}});
  CHECK_THROWS_AS(ctrb_matrix(A, RMatrix{{1}, {0}, {0}}), std::invalid_argument);
}

TEST_CASE("controllability is invariant under similarity") {
  std::mt19937 rng(6);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
    const RMatrix A = testsupport::random_int_matrix(rng, n, n, -2, 2, 0.4);
    const RMatrix B = testsupport::random_int_matrix(rng, n, 1, -1, 1, 0.4);
    RMatrix T;
    do T = testsupport::random_int_matrix(rng, n, n, -2, 2); while (rat_rank(T) < n);
    const RMatrix Ti = inverse(T);
    CHECK(ctrb_rank(A, B) == ctrb_rank(T * A * Ti, T * B));
  }
}

TEST_CASE("Kalman and PBH agree") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    const auto N = static_cast<std::size_t>(testsupport::uniform(rng, 2, 3));
    const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 2));
    const NodeSystem node = testsupport::random_siso_node(rng, n);
    const AssembledSystem sys = assemble(node, testsupport::random_topology(rng, N, 0.5));
    const Verdict v = networked_controllable(sys);
    bool pbh_full = true;
    const SpectrumReport sp = spectrum(sys.Phi);
    for (const Rational& s : sp.exact_roots) pbh_full = pbh_full && pbh_rank_at(sys, s) == sys.state_dim();
    for (Complex s : sp.numeric_roots) pbh_full = pbh_full && pbh_rank_at(sys, s) == sys.state_dim();
    CHECK(v.controllable == pbh_full);
    CHECK(v.controllable == (v.achieved_rank == v.required_rank));
    if (!v.controllable) {
      REQUIRE(v.witness);
      const Witness& w = *v.witness;
      CHECK(w.residual < 1e-8);
      if (w.s0_exact) {
        REQUIRE(w.alpha_exact);
        const RMatrix& a = *w.alpha_exact;
        CHECK_FALSE(a.is_zero());
        CHECK((a * (RMatrix::identity(sys.state_dim()) * *w.s0_exact - sys.Phi)).is_zero());
        CHECK((a * sys.Psi).is_zero());
        CHECK(pbh_rank_at(sys, *w.s0_exact) < sys.state_dim());
      }
    }
  }
}

TEST_CASE("witnesses list the unstable exact mode first") {
  // Two decoupled uncontrollable modes 4 and -1 with nothing driving them.
  const RMatrix A{{4, 0, 0}, {0, -1, 0}, {0, 0, 2}};
  const RMatrix B{{0}, {0}, {1}};
  const auto ws = pbh_witnesses(A, B);
  REQUIRE(ws.size() == 2);
  CHECK(*ws[0].s0_exact == 4);
  CHECK(*ws[1].s0_exact == -1);
}

TEST_CASE("irrational uncontrollable modes produce numeric witnesses") {
  // Mode pair of s^2 - 2 is undriven.
  const RMatrix A{{0, 2, 0}, {1, 0, 0}, {0, 0, 5}};
  const RMatrix B{{0}, {0}, {1}};
  const auto ws = pbh_witnesses(A, B);
  REQUIRE(ws.size() == 2);
  for (const auto& w : ws) {
    CHECK(w.confidence == Confidence::numeric);
    CHECK(std::abs(std::abs(w.s0.real()) - std::sqrt(2.0)) < 1e-9);
    CHECK(w.residual < 1e-8);
  }
  CHECK(ws[0].s0.real() > ws[1].s0.real());
}

TEST_CASE("(L, Delta) pair") {
  Topology star{RMatrix(3, 3), {true, false, false}};
  star.L(1, 0) = 1;
  star.L(2, 0) = 1;
  CHECK_FALSE(pair_controllable_LDelta(star));
  star.L(2, 0) = 2;
  CHECK_FALSE(pair_controllable_LDelta(star));
  Topology chain{RMatrix(3, 3), {true, false, false}};
  chain.L(1, 0) = 1;
  chain.L(2, 1) = -2;
  CHECK(pair_controllable_LDelta(chain));
}
