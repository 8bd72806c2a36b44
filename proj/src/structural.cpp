#include "netctrl/structural.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace netctrl {

std::vector<std::size_t> Digraph::in_degree() const {
  std::vector<std::size_t> d(N, 0);
  for (const auto& e : edges) ++d[e.head];
  return d;
}

std::vector<std::size_t> Digraph::out_degree() const {
  std::vector<std::size_t> d(N, 0);
  for (const auto& e : edges) ++d[e.tail];
  return d;
}

std::vector<std::vector<std::size_t>> Digraph::successors() const {
  std::vector<std::vector<std::size_t>> s(N);
  for (const auto& e : edges) s[e.tail].push_back(e.head);
  return s;
}

Digraph digraph_from(const Topology& topo) {
  Digraph g;
  g.N = topo.N();
  for (std::size_t j = 0; j < g.N; ++j)
    for (std::size_t i = 0; i < g.N; ++i)
      if (i != j && topo.L(i, j) != 0) g.edges.push_back({j, i});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Hopcroft-Karp on left vertices [0, left) with adjacency adj into right
// vertices [0, right). Returns match_right[r] = matched left vertex or kNone.
std::vector<std::size_t> hopcroft_karp(std::size_t left, std::size_t right,
                                       const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::size_t> match_left(left, kNone), match_right(right, kNone), dist(left);
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  auto bfs = [&]() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < left; ++u) {
      if (match_left[u] == kNone) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        std::size_t w = match_right[v];
        if (w == kNone) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t v : adj[u]) {
      std::size_t w = match_right[v];
      if (w == kNone || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (std::size_t u = 0; u < left; ++u)
      if (match_left[u] == kNone) dfs(dfs, u);
  }
  return match_right;
}

std::vector<bool> reachable_from(const Digraph& g, const std::vector<std::size_t>& sources) {
  std::vector<bool> seen(g.N, false);
  const auto succ = g.successors();
  std::queue<std::size_t> q;
  for (auto s : sources) {
    seen[s] = true;
    q.push(s);
  }
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto v : succ[u])
      if (!seen[v]) {
        seen[v] = true;
        q.push(v);
      }
  }
  return seen;
}

struct RootedTree {
  std::size_t root;
  std::vector<std::size_t> leaves;
};

std::optional<RootedTree> rooted_out_tree(const Digraph& g) {
  if (g.N < 2 || g.edges.size() != g.N - 1) return std::nullopt;
  const auto in = g.in_degree();
  const auto out = g.out_degree();
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < g.N; ++i) {
    if (in[i] == 0) {
      if (root) return std::nullopt;
      root = i;
    } else if (in[i] != 1) {
      return std::nullopt;
    }
  }
  if (!root) return std::nullopt;
  const auto seen = reachable_from(g, {*root});
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
  RootedTree t{*root, {}};
  for (std::size_t i = 0; i < g.N; ++i)
    if (i != *root && in[i] + out[i] == 1) t.leaves.push_back(i);
  return t;
}

}  // namespace

MatchingReport max_matching(const Digraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.N);
  for (const auto& e : g.edges) adj[e.tail].push_back(e.head);
  const auto match_right = hopcroft_karp(g.N, g.N, adj);

  MatchingReport r;
  for (std::size_t v = 0; v < g.N; ++v) {
    if (match_right[v] != kNone) {
      r.matching.push_back({match_right[v], v});
      r.matched_nodes.push_back(v);
    } else {
      r.unmatched_nodes.push_back(v);
    }
  }
  r.is_perfect = r.unmatched_nodes.empty();
  return r;
}

StructuralReport structurally_controllable(const Topology& topo) {
  StructuralReport r;
  const Digraph g = digraph_from(topo);
  r.matching = max_matching(g);

  // Only heads without an input must be matched.
  std::vector<std::vector<std::size_t>> adj(g.N);
  for (const auto& e : g.edges)
    if (!topo.delta[e.head]) adj[e.tail].push_back(e.head);
  const auto match_right = hopcroft_karp(g.N, g.N, adj);
  for (std::size_t v = 0; v < g.N; ++v)
    if (!topo.delta[v] && match_right[v] == kNone) r.uncovered.push_back(v);
  r.dilation_free = r.uncovered.empty();

  const auto seen = reachable_from(g, topo.inputs());
  for (std::size_t v = 0; v < g.N; ++v)
    if (!seen[v]) r.unreachable.push_back(v);
  r.accessible = r.unreachable.empty();

  r.controllable = r.dilation_free && r.accessible;
  return r;
}

const char* to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::chain: return "chain";
    case TopologyKind::star: return "star";
    case TopologyKind::tree: return "tree";
    case TopologyKind::cycle: return "cycle";
    case TopologyKind::general: return "general";
  }
  return "general";
}

TopologyClass classify(const Topology& topo) {
  const Digraph g = digraph_from(topo);
  TopologyClass c;
  if (auto tree = rooted_out_tree(g)) {
    c.root = tree->root;
    c.leaves = tree->leaves;
    const auto out = g.out_degree();
    if (tree->leaves.size() == 1) {
      c.kind = TopologyKind::chain;
      const auto succ = g.successors();
      std::size_t v = tree->root;
      c.order.push_back(v);
      while (!succ[v].empty()) {
        v = succ[v].front();
        c.order.push_back(v);
      }
    } else if (out[tree->root] == g.N - 1) {
      c.kind = TopologyKind::star;
    } else {
      c.kind = TopologyKind::tree;
    }
    return c;
  }

  if (g.N >= 2 && g.edges.size() == g.N) {
    const auto in = g.in_degree();
    const auto out = g.out_degree();
    bool regular = true;
    for (std::size_t i = 0; i < g.N; ++i) regular = regular && in[i] == 1 && out[i] == 1;
    if (regular) {
      const auto succ = g.successors();
      std::vector<std::size_t> order{0};
      std::size_t v = succ[0].front();
      while (v != 0 && order.size() <= g.N) {
        order.push_back(v);
        v = succ[v].front();
      }
      if (order.size() == g.N) {
        c.kind = TopologyKind::cycle;
        c.order = std::move(order);
        return c;
      }
    }
  }
  c.kind = TopologyKind::general;
  return c;
}

std::optional<bool> leaves_exceed_inputs(const Topology& topo) {
  auto tree = rooted_out_tree(digraph_from(topo));
  if (!tree) return std::nullopt;
  return tree->leaves.size() > topo.inputs().size();
}

}  // namespace netctrl
