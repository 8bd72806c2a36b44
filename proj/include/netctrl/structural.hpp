#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "netctrl/model.hpp"

namespace netctrl {

/// Directed edge tail -> head, 0-based.
struct Edge {
  std::size_t tail;
  std::size_t head;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge j -> i for every nonzero L(i, j). Edges sorted by (tail, head).
struct Digraph {
  std::size_t N = 0;
  std::vector<Edge> edges;

  std::vector<std::size_t> in_degree() const;
  std::vector<std::size_t> out_degree() const;
  std::vector<std::vector<std::size_t>> successors() const;
};

Digraph digraph_from(const Topology& topo);

struct MatchingReport {
  std::vector<Edge> matching;  // sorted by head
  std::vector<std::size_t> matched_nodes;
  std::vector<std::size_t> unmatched_nodes;  // heads not covered
  bool is_perfect = false;
};

/// Maximum-cardinality matching on the tail/head bipartite split
/// (Hopcroft-Karp). Lower indices are tried first, so results are stable.
MatchingReport max_matching(const Digraph& g);

struct StructuralReport {
  bool controllable = false;
  /// A matching covers every node that has no external input.
  bool dilation_free = false;
  /// Every node is reachable from an input node (inputs reach themselves).
  bool accessible = false;
  MatchingReport matching;           // unconstrained maximum matching
  std::vector<std::size_t> uncovered;    // non-input nodes no matching can cover
  std::vector<std::size_t> unreachable;  // nodes not reachable from any input
};

/// Structural controllability of (L, Delta) with one-dimensional nodes.
StructuralReport structurally_controllable(const Topology& topo);

enum class TopologyKind { chain, star, tree, cycle, general };

const char* to_string(TopologyKind k);

struct TopologyClass {
  TopologyKind kind = TopologyKind::general;
  std::optional<std::size_t> root;  // trees only
  std::vector<std::size_t> leaves;  // trees only, ascending
  /// chain: path from the root; cycle: successor order from node 0.
  std::vector<std::size_t> order;
};

/// Precedence chain > star > tree > cycle > general. Trees are rooted
/// out-trees (every node reachable from the root).
TopologyClass classify(const Topology& topo);

/// nullopt when the topology is not a rooted out-tree; otherwise whether the
/// leaf count exceeds the number of driven nodes.
std::optional<bool> leaves_exceed_inputs(const Topology& topo);

}  // namespace netctrl
