#include "netctrl/corpus.hpp"

#include <algorithm>

namespace netctrl {

namespace {

struct EdgeSpec {
  std::size_t from;  // 1-based
  std::size_t to;
  Rational weight = 1;
};

Topology topology(std::size_t N, std::initializer_list<EdgeSpec> edges, std::initializer_list<std::size_t> inputs) {
  Topology t;
  t.L = RMatrix(N, N);
  for (const auto& e : edges) t.L(e.to - 1, e.from - 1) = e.weight;
  t.delta.assign(N, false);
  for (std::size_t i : inputs) t.delta[i - 1] = true;
  return t;
}

std::string yes_no(bool b, const char* yes, const char* no) { return b ? yes : no; }

CorpusCheck expect_verdict(bool controllable, std::string quote) {
  return [=](const CorpusContext& c) {
    const bool got = c.cert.direct.controllable;
    return CheckOutcome{"verdict", yes_no(controllable, "controllable", "uncontrollable"),
                        yes_no(got, "controllable", "uncontrollable"), got == controllable, quote};
  };
}

CorpusCheck expect_rank(std::size_t achieved, std::size_t required, std::string quote) {
  return [=](const CorpusContext& c) {
    const auto& v = c.cert.direct;
    return CheckOutcome{"controllability rank", std::to_string(achieved) + "/" + std::to_string(required),
                        std::to_string(v.achieved_rank) + "/" + std::to_string(v.required_rank),
                        v.achieved_rank == achieved && v.required_rank == required, quote};
  };
}

CorpusCheck expect_pbh_rank(Rational s, std::size_t rank, std::string quote) {
  return [=](const CorpusContext& c) {
    const std::size_t got = pbh_rank_at(c.sys, s);
    return CheckOutcome{"rank [" + to_string(s) + "I - Phi, Psi]", std::to_string(rank), std::to_string(got),
                        got == rank, quote};
  };
}

CorpusCheck expect_witness_at(Rational s, std::string quote) {
  return [=](const CorpusContext& c) {
    const auto& w = c.cert.direct.witness;
    std::string got = "none";
    bool ok = false;
    if (w && w->s0_exact) {
      got = to_string(*w->s0_exact) + (w->residual == 0.0 ? ", residual exactly 0" : ", residual nonzero");
      ok = *w->s0_exact == s && w->residual == 0.0;
    }
    return CheckOutcome{"PBH witness", to_string(s) + ", residual exactly 0", got, ok, quote};
  };
}

CorpusCheck expect_condition(std::string id, Status status, std::string quote) {
  return [=](const CorpusContext& c) {
    auto it = std::find_if(c.cert.conditions.begin(), c.cert.conditions.end(),
                           [&](const ConditionResult& r) { return r.id == id; });
    const std::string got = it == c.cert.conditions.end() ? "missing" : to_string(it->status);
    return CheckOutcome{id, to_string(status), got, got == to_string(status), quote};
  };
}

CorpusCheck expect_evidence(std::string id, std::string name, Rational value, std::string quote) {
  return [=](const CorpusContext& c) {
    std::string got = "missing";
    for (const auto& r : c.cert.conditions) {
      if (r.id != id || !r.evidence) continue;
      if (name == "root") {
        if (!r.evidence->roots.empty()) got = to_string(r.evidence->roots.front());
      } else {
        for (const auto& [k, v] : r.evidence->values)
          if (k == name) got = to_string(v);
      }
    }
    return CheckOutcome{id + " " + name, to_string(value), got, got == to_string(value), quote};
  };
}

CorpusCheck expect_pair(std::string what, std::function<bool(const AssembledSystem&)> test, bool expected,
                        std::string quote) {
  return [=](const CorpusContext& c) {
    const bool got = test(c.sys);
    return CheckOutcome{what, yes_no(expected, "true", "false"), yes_no(got, "true", "false"), got == expected, quote};
  };
}

CorpusCheck expect_no_contradiction(std::string quote) {
  return [=](const CorpusContext& c) {
    const auto& k = c.cert.contradictions;
    return CheckOutcome{"contradictions", "none", k.empty() ? "none" : k.front(), k.empty(), quote};
  };
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string id, std::string title, NodeSystem node, Topology topo, std::vector<CorpusCheck> checks) {
    NetworkSpec spec{id + ": " + title, std::move(node), std::move(topo)};
    out.push_back({std::move(id), std::move(title), std::move(spec), std::move(checks)});
  };

  const auto ab = [](const AssembledSystem& s) { return is_controllable(s.node.A, s.node.B); };
  const auto ahc = [](const AssembledSystem& s) { return is_controllable(s.node.A, s.node.H * s.node.C); };
  const auto ac = [](const AssembledSystem& s) { return is_observable(s.node.A, s.node.C); };

  add("ex1", "star 1 -> {2, 3}, node 1 driven",
      {{{1, 2}, {3, 2}}, RMatrix::identity(2), RMatrix::identity(2), {{1, 0}, {0, 2}}},
      topology(3, {{1, 2}, {1, 3}}, {1}),
      {expect_pair("(L,Delta) controllable", [](const AssembledSystem& s) { return pair_controllable_LDelta(s.topo); },
                   false, "uncontrollable for any matrix A"),
       expect_verdict(false, "uncontrollable for any matrix A"),
       expect_pair("structurally controllable",
                   [](const AssembledSystem& s) { return structurally_controllable(s.topo).controllable; }, false,
                   "not structurally controllable with one external input"),
       expect_condition("T5", Status::fails, "uncontrollable for any matrix A")});

  add("ex2", "two-node cycle, both nodes driven",
      {{{1, 0}, {1, 1}}, {{1}, {0}}, {{1, 0}}, {{0}, {1}}}, topology(2, {{1, 2}, {2, 1}}, {1, 2}),
      {expect_verdict(false, "the networked system is uncontrollable"),
       expect_pbh_rank(1, 3, "the networked system is uncontrollable")});

  add("ex3", "two-node cycle, node 1 driven",
      {{{1, 0}, {1, 1}}, {{1}, {0}}, {{0, 1}}, {{0}, {1}}}, topology(2, {{1, 2}, {2, 1}}, {1}),
      {expect_verdict(false, "the networked system is uncontrollable"),
       expect_condition("T3", Status::holds, "the networked system is uncontrollable")});

  add("ex4", "two-node cycle, node 1 driven",
      {{{1, 0}, {1, 1}}, {{0}, {1}}, {{0, 1}}, {{1}, {0}}}, topology(2, {{1, 2}, {2, 1}}, {1}),
      {expect_verdict(true, "the networked system is controllable")});

  add("ex5", "chain 1 -> 2 with two-input nodes",
      {{{1, 0}, {1, 1}}, RMatrix::identity(2), {{1, 0}}, {{1}, {0}}}, topology(2, {{1, 2}}, {1}),
      {expect_rank(4, 4, "rank(Sigma, Phi Sigma, Phi^2 Sigma, Phi^3 Sigma) = 4"),
       expect_verdict(true, "rank(Sigma, Phi Sigma, Phi^2 Sigma, Phi^3 Sigma) = 4")});

  add("ex6", "chain 1 -> 2",
      {{{1, 2}, {5, 4}}, {{2}, {-1}}, RMatrix::identity(2), {{-1, 1}, {-4, 1}}}, topology(2, {{1, 2}}, {1}),
      {expect_pbh_rank(6, 3, "rank(6 I - Phi, Sigma) = 3 < 4"),
       expect_verdict(false, "rank(6 I - Phi, Sigma) = 3 < 4"),
       expect_witness_at(6, "rank(6 I - Phi, Sigma) = 3 < 4")});

  add("ex7", "three-node cycle, n = 4",
      {{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}},
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
       {{0, 1, 0, 0}, {0, 0, 1, 0}},
       {{0, 1}, {0, 0}, {0, 0}, {1, 0}}},
      topology(3, {{3, 1}, {1, 2}, {2, 3}}, {1}),
      {expect_rank(12, 12, "= 12, indicating controllability"), expect_verdict(true, "= 12, indicating controllability"),
       expect_pair("(A,B) controllable", ab, false, "(A,B) is uncontrollable"),
       expect_pair("(A,C) observable", ac, false, "(A,C) is unobservable")});

  add("ex8", "three-node cycle, every node driven",
      {{{1, 1}, {0, 1}}, {{1}, {1}}, RMatrix::identity(2), {{0, 0}, {0, 1}}},
      topology(3, {{3, 1}, {1, 2}, {2, 3}}, {1, 2, 3}),
      {expect_rank(5, 6, "= 5 < 6"), expect_verdict(false, "= 5 < 6"),
       expect_pair("(A,B) controllable", ab, true, "(A,B) controllable"),
       expect_pair("(A,HC) controllable", ahc, true, "(A,HC) controllable"),
       expect_pair("(A,C) observable", ac, true, "(A,C) observable"),
       expect_no_contradiction("= 5 < 6")});

  add("ex9", "three-node SISO cycle",
      {{{0, 1}, {0, 0}}, {{1}, {0}}, {{1, 0}}, {{0}, {1}}}, topology(3, {{3, 1}, {1, 2}, {2, 3}}, {1}),
      {expect_rank(6, 6, "= 6, indicating controllability"),
       expect_condition("T8", Status::holds, "= 6, indicating controllability"),
       expect_condition("T9-cycle", Status::holds, "sigma(A) = {0, 0}")});

  add("ex10", "three-node SISO cycle with a negative weight",
      {{{1, 8, 7}, {4, 5, 6}, {1, 2, 3}}, {{1}, {0}, {1}}, {{4, 3, 6}}, {{1}, {1}, {1}}},
      topology(3, {{3, 1, -1}, {1, 2}, {2, 3}}, {1}),
      {expect_rank(8, 9, "= 8 < 9"), expect_verdict(false, "= 8 < 9"),
       expect_condition("T9-cycle", Status::fails, "= 8 < 9"),
       expect_evidence("T9-cycle", "root", 2, "C(2I - A)^{-1} H = -1, b = -1"),
       expect_evidence("T9-cycle", "gamma", -1, "C(2I - A)^{-1} H = -1"),
       expect_evidence("T9-cycle", "b", -1, "b = -1")});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view id) {
  for (const auto& e : corpus())
    if (e.id == id) return &e;
  return nullptr;
}

CorpusResult run_corpus_entry(const CorpusEntry& entry, const NumericTolerance& tol) {
  const AssembledSystem sys = assemble(entry.spec.node, entry.spec.topo);
  const Certification cert = certify(sys, tol);
  CorpusResult r;
  r.id = entry.id;
  const CorpusContext ctx{sys, cert};
  for (const auto& check : entry.checks) {
    r.checks.push_back(check(ctx));
    r.pass = r.pass && r.checks.back().pass;
  }
  return r;
}

}  // namespace netctrl
