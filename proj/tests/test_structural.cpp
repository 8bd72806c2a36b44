#include <doctest.h>

#include <random>

#include "netctrl/structural.hpp"
#include "support.hpp"

using namespace netctrl;

namespace {

Topology from_edges(std::size_t N, std::initializer_list<std::pair<std::size_t, std::size_t>> edges,
                    std::initializer_list<std::size_t> inputs) {
  Topology t{RMatrix(N, N), std::vector<bool>(N, false)};
  for (auto [from, to] : edges) t.L(to, from) = 1;
  for (std::size_t i : inputs) t.delta[i] = true;
  return t;
}

}  // namespace

TEST_CASE("matching agrees with exhaustive search") {
  std::mt19937 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto N = static_cast<std::size_t>(testsupport::uniform(rng, 2, 6));
    const Topology topo = testsupport::random_topology(rng, N, std::uniform_real_distribution<double>(0.05, 0.7)(rng));
    const Digraph g = digraph_from(topo);
    const MatchingReport m = max_matching(g);
    CHECK(m.matching.size() == testsupport::brute_force_matching(g));
    std::vector<int> tails(N), heads(N);
    for (const Edge& e : m.matching) {
      CHECK(topo.L(e.head, e.tail) != 0);
      ++tails[e.tail];
      ++heads[e.head];
    }
    for (std::size_t i = 0; i < N; ++i) CHECK((tails[i] <= 1 && heads[i] <= 1));
    CHECK(m.unmatched_nodes.size() + m.matching.size() == N);
    CHECK(m.is_perfect == (m.matching.size() == N));
  }
}

TEST_CASE("matching is deterministic") {
  const Topology t = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 0}}, {0});
  const auto a = max_matching(digraph_from(t));
  const auto b = max_matching(digraph_from(t));
  CHECK(a.matching == b.matching);
}

TEST_CASE("structural controllability") {
  // Star with root driven: two leaves compete for one tail.
  auto r = structurally_controllable(from_edges(3, {{0, 1}, {0, 2}}, {0}));
  CHECK_FALSE(r.controllable);
  CHECK_FALSE(r.dilation_free);
  CHECK(r.accessible);
  // Chain and cycle from one input.
  CHECK(structurally_controllable(from_edges(3, {{0, 1}, {1, 2}}, {0})).controllable);
  CHECK(structurally_controllable(from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, {0})).controllable);
  // Unreachable node.
  r = structurally_controllable(from_edges(3, {{0, 1}}, {0}));
  CHECK_FALSE(r.accessible);
  CHECK(r.unreachable == std::vector<std::size_t>{2});
  // Isolated driven node reaches itself.
  CHECK(structurally_controllable(from_edges(3, {{0, 1}}, {0, 2})).controllable);
  // Driving every leaf fixes the star.
  CHECK(structurally_controllable(from_edges(3, {{0, 1}, {0, 2}}, {0, 2})).controllable);
}

TEST_CASE("classification") {
  auto c = classify(from_edges(3, {{0, 1}, {1, 2}}, {0}));
  CHECK(c.kind == TopologyKind::chain);
  CHECK(c.root == 0u);
  CHECK(c.order == std::vector<std::size_t>{0, 1, 2});
  CHECK(c.leaves == std::vector<std::size_t>{2});

  c = classify(from_edges(4, {{2, 0}, {2, 1}, {2, 3}}, {2}));
  CHECK(c.kind == TopologyKind::star);
  CHECK(c.root == 2u);
  CHECK(c.leaves == std::vector<std::size_t>{0, 1, 3});

  c = classify(from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}, {0}));
  CHECK(c.kind == TopologyKind::tree);
  CHECK(c.leaves == std::vector<std::size_t>{2, 3, 4});

  c = classify(from_edges(3, {{2, 0}, {0, 1}, {1, 2}}, {0}));
  CHECK(c.kind == TopologyKind::cycle);
  CHECK(c.order == std::vector<std::size_t>{0, 1, 2});

  CHECK(classify(from_edges(3, {{0, 1}, {1, 0}, {1, 2}}, {0})).kind == TopologyKind::general);
  // Two-node mutual cycle.
  CHECK(classify(from_edges(2, {{0, 1}, {1, 0}}, {0})).kind == TopologyKind::cycle);
  // Two-node chain wins over star.
  CHECK(classify(from_edges(2, {{1, 0}}, {1})).kind == TopologyKind::chain);
}

TEST_CASE("leaves versus inputs") {
  CHECK(leaves_exceed_inputs(from_edges(3, {{0, 1}, {0, 2}}, {0})) == true);
  CHECK(leaves_exceed_inputs(from_edges(3, {{0, 1}, {0, 2}}, {0, 1})) == false);
  CHECK_FALSE(leaves_exceed_inputs(from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, {0})).has_value());
}
