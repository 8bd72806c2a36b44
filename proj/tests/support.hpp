#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "netctrl/model.hpp"
#include "netctrl/rmatrix.hpp"
#include "netctrl/structural.hpp"

namespace testsupport {

using netctrl::Edge;
using netctrl::NodeSystem;
using netctrl::Rational;
using netctrl::RMatrix;
using netctrl::Topology;

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline RMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, double zero_prob = 0.0) {
  RMatrix m(r, c);
  std::bernoulli_distribution zero(zero_prob);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = zero(rng) ? 0 : uniform(rng, lo, hi);
  return m;
}

/// Determinant by cofactor expansion along the first row.
inline Rational cofactor_det(const RMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const Rational term = m(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const RMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        RMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        found = cofactor_det(sub) != 0;
        return !found;
      });
      return !found;
    });
    if (found) return k;
  }
  return 0;
}

/// Maximum matching size by trying every assignment of a distinct tail to
/// each head (or leaving it unmatched).
inline std::size_t brute_force_matching(const netctrl::Digraph& g) {
  std::vector<std::vector<std::size_t>> tails_of(g.N);
  for (const Edge& e : g.edges) tails_of[e.head].push_back(e.tail);
  std::vector<bool> used(g.N, false);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t head, std::size_t size) {
    if (head == g.N) {
      best = std::max(best, size);
      return;
    }
    go(head + 1, size);
    for (std::size_t t : tails_of[head]) {
      if (used[t]) continue;
      used[t] = true;
      go(head + 1, size + 1);
      used[t] = false;
    }
  };
  go(0, 0);
  return best;
}

inline Rational random_weight(std::mt19937& rng) {
  int w = 0;
  while (w == 0) w = uniform(rng, -3, 3);
  return w;
}

/// Random loop-free digraph on N nodes with at least one input.
inline Topology random_topology(std::mt19937& rng, std::size_t N, double edge_prob, bool weighted = true) {
  Topology t;
  t.L = RMatrix(N, N);
  std::bernoulli_distribution edge(edge_prob);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j && edge(rng)) t.L(i, j) = weighted ? random_weight(rng) : Rational(1);
  t.delta.assign(N, false);
  std::bernoulli_distribution driven(0.35);
  for (std::size_t i = 0; i < N; ++i) t.delta[i] = driven(rng);
  t.delta[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(N) - 1))] = true;
  return t;
}

/// Random rooted out-tree: node k > 0 hangs from a random earlier node,
/// then labels are shuffled.
inline Topology random_tree(std::mt19937& rng, std::size_t N) {
  std::vector<std::size_t> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Topology t;
  t.L = RMatrix(N, N);
  for (std::size_t k = 1; k < N; ++k) {
    const auto parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(k) - 1));
    t.L(perm[k], perm[parent]) = random_weight(rng);
  }
  t.delta.assign(N, false);
  t.delta[perm[0]] = true;
  std::bernoulli_distribution extra(0.2);
  for (std::size_t k = 1; k < N; ++k)
    if (extra(rng)) t.delta[perm[k]] = true;
  return t;
}

/// Directed cycle through a random permutation of the nodes.
inline Topology random_cycle(std::mt19937& rng, std::size_t N) {
  std::vector<std::size_t> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Topology t;
  t.L = RMatrix(N, N);
  for (std::size_t k = 0; k < N; ++k) t.L(perm[(k + 1) % N], perm[k]) = random_weight(rng);
  t.delta.assign(N, false);
  t.delta[perm[0]] = true;
  return t;
}

/// A = T J T^{-1} with small integer eigenvalues, optionally one Jordan block.
inline RMatrix rational_spectrum_matrix(std::mt19937& rng, std::size_t n) {
  RMatrix J(n, n);
  for (std::size_t i = 0; i < n; ++i) J(i, i) = uniform(rng, -2, 2);
  std::bernoulli_distribution jordan(0.3);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (jordan(rng)) {
      J(i + 1, i + 1) = J(i, i);
      J(i, i + 1) = 1;
    }
  RMatrix T;
  do {
    T = random_int_matrix(rng, n, n, -2, 2);
  } while (netctrl::rat_rank(T) < n);
  return T * J * netctrl::inverse(T);
}

inline NodeSystem random_siso_node(std::mt19937& rng, std::size_t n) {
  NodeSystem node;
  node.A = rational_spectrum_matrix(rng, n);
  node.B = random_int_matrix(rng, n, 1, -2, 2, 0.1);
  node.C = random_int_matrix(rng, 1, n, -2, 2, 0.1);
  node.H = random_int_matrix(rng, n, 1, -2, 2, 0.1);
  return node;
}

inline NodeSystem random_node(std::mt19937& rng, std::size_t n, std::size_t p, std::size_t m) {
  NodeSystem node;
  node.A = random_int_matrix(rng, n, n, -2, 2, 0.4);
  node.B = random_int_matrix(rng, n, p, -2, 2, 0.4);
  node.C = random_int_matrix(rng, m, n, -2, 2, 0.4);
  node.H = random_int_matrix(rng, n, m, -2, 2, 0.4);
  return node;
}

}  // namespace testsupport
