#include "netctrl/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace netctrl {

const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

const std::vector<std::string>& condition_ids() {
  static const std::vector<std::string> ids{"T1",    "T2",     "T3",     "T5",    "C6",        "C10",      "T8.i",
                                            "T8.ii", "T8.iii", "T8.iv", "T8",    "C12-chain", "T9-cycle"};
  return ids;
}

bool is_necessary_condition(std::string_view id) {
  return id == "T1" || id == "T2" || id == "T3" || id == "T5" || id == "C6" || id == "C10" || id == "T8.i" ||
         id == "T8.ii" || id == "T8.iii" || id == "T8.iv";
}

bool is_characterization(std::string_view id) { return id == "T8" || id == "C12-chain" || id == "T9-cycle"; }

namespace {

ConditionResult result(std::string id, Status status, std::string note = {}) {
  ConditionResult r;
  r.id = std::move(id);
  r.status = status;
  r.note = std::move(note);
  return r;
}

std::string node_list(const std::vector<std::size_t>& nodes) {
  std::ostringstream os;
  for (std::size_t k = 0; k < nodes.size(); ++k) os << (k ? ", " : "") << nodes[k] + 1;
  return os.str();
}

// Evidence from the first PBH eigenvector of an uncontrollable pair.
Evidence witness_evidence(const RMatrix& A, const RMatrix& B) {
  Evidence ev;
  auto ws = pbh_witnesses(A, B);
  if (ws.empty()) return ev;
  const Witness& w = ws.front();
  if (w.s0_exact) {
    ev.roots.push_back(*w.s0_exact);
    ev.vector = w.alpha_exact;
  } else {
    ev.numeric_points.push_back(w.s0);
    ev.numeric_vector = Eigen::MatrixXcd(w.alpha);
  }
  return ev;
}

bool siso_battery_applies(const AssembledSystem& sys) {
  return sys.node.siso() && sys.topo.inputs().size() < sys.topo.N();
}

ConditionResult siso_not_applicable(std::string id, const AssembledSystem& sys) {
  if (!sys.node.siso()) return result(std::move(id), Status::not_applicable, "node is not SISO");
  return result(std::move(id), Status::not_applicable, "every node is driven");
}

bool same_point(Complex a, Complex b) { return std::abs(a - b) <= 1e-7 * (1.0 + std::abs(a)); }

}  // namespace

ConditionResult check_T1(const AssembledSystem& sys) {
  const Digraph g = digraph_from(sys.topo);
  const auto in = g.in_degree();
  std::vector<std::size_t> sources, undriven;
  for (std::size_t i = 0; i < g.N; ++i) {
    if (in[i] != 0) continue;
    sources.push_back(i);
    if (!sys.topo.delta[i]) undriven.push_back(i);
  }
  if (sources.empty()) return result("T1", Status::not_applicable, "every node has an incoming edge");
  const bool ab = is_controllable(sys.node.A, sys.node.B);
  if (undriven.empty() && ab) return result("T1", Status::holds, "source nodes " + node_list(sources) + " are driven and (A,B) is controllable");

  ConditionResult r = result("T1", Status::fails);
  Evidence ev;
  if (!ab) {
    ev = witness_evidence(sys.node.A, sys.node.B);
    r.note = "(A,B) is uncontrollable";
  }
  if (!undriven.empty()) {
    r.note += std::string(r.note.empty() ? "" : "; ") + "source nodes without input: " + node_list(undriven);
  }
  ev.nodes = undriven;
  r.evidence = std::move(ev);
  return r;
}

ConditionResult check_T2(const AssembledSystem& sys) {
  const auto inputs = sys.topo.inputs();
  if (inputs.size() == sys.topo.N()) return result("T2", Status::not_applicable, "every node is driven");
  const RMatrix hc = sys.node.H * sys.node.C;
  if (is_controllable(sys.node.A, hc)) return result("T2", Status::holds, "(A,HC) is controllable");

  ConditionResult r = result("T2", Status::fails, "(A,HC) is uncontrollable");
  Evidence ev = witness_evidence(sys.node.A, hc);
  std::size_t undriven = 0;
  while (sys.topo.delta[undriven]) ++undriven;
  ev.nodes = {undriven};
  // Lift xi to alpha = e_i (x) xi at the undriven node.
  if (ev.vector) {
    RMatrix e(1, sys.topo.N());
    e(0, undriven) = 1;
    ev.vector = kron(e, *ev.vector);
  }
  r.evidence = std::move(ev);
  return r;
}

ConditionResult check_T3(const AssembledSystem& sys) {
  const std::size_t driven = sys.topo.inputs().size();
  const std::size_t rank_b = rat_rank(sys.node.B);
  if (!(sys.topo.N() > driven * rank_b)) {
    return result("T3", Status::not_applicable,
                  "N = " + std::to_string(sys.topo.N()) + " <= " + std::to_string(driven) + " * rank(B) = " +
                      std::to_string(driven * rank_b));
  }
  if (is_observable(sys.node.A, sys.node.C)) return result("T3", Status::holds, "(A,C) is observable");
  ConditionResult r = result("T3", Status::fails, "(A,C) is unobservable");
  Evidence ev = witness_evidence(sys.node.A.transpose(), sys.node.C.transpose());
  if (ev.vector) ev.vector = ev.vector->transpose();
  r.evidence = std::move(ev);
  return r;
}

ConditionResult check_T5(const AssembledSystem& sys) {
  if (pair_controllable_LDelta(sys.topo)) return result("T5", Status::holds, "(L,Delta) is controllable");
  ConditionResult r = result("T5", Status::fails, "(L,Delta) is uncontrollable");
  r.evidence = witness_evidence(sys.topo.L, sys.topo.delta_matrix());
  return r;
}

ConditionResult check_C6(const AssembledSystem& sys) {
  auto exceed = leaves_exceed_inputs(sys.topo);
  if (!exceed) return result("C6", Status::not_applicable, "topology is not a rooted tree");
  const TopologyClass tc = classify(sys.topo);
  const std::string counts = std::to_string(tc.leaves.size()) + " leaves, " +
                             std::to_string(sys.topo.inputs().size()) + " driven nodes";
  if (!*exceed) return result("C6", Status::holds, counts);
  ConditionResult r = result("C6", Status::fails, counts);
  Evidence ev;
  ev.nodes = tc.leaves;
  r.evidence = std::move(ev);
  return r;
}

ConditionResult check_star(const AssembledSystem& sys) {
  const TopologyClass tc = classify(sys.topo);
  if (tc.kind != TopologyKind::star && tc.kind != TopologyKind::tree)
    return result("C10", Status::not_applicable, std::string("topology is ") + to_string(tc.kind));
  const auto inputs = sys.topo.inputs();
  if (inputs.size() != 1 || inputs.front() != *tc.root)
    return result("C10", Status::not_applicable, "inputs are not exactly the root");
  ConditionResult r = result("C10", Status::fails,
                             std::to_string(tc.leaves.size()) + " leaves with only the root driven");
  Evidence ev;
  ev.nodes = tc.leaves;
  r.evidence = std::move(ev);
  return r;
}

GammaBasis gamma_basis(const Rational& s, const NodeSystem& node) {
  const RMatrix pencil = RMatrix::identity(node.n()) * s - node.A;
  return {s, left_nullspace(pencil), left_nullspace(hstack(pencil, node.B))};
}

NumericGammaBasis gamma_basis(Complex s, const NodeSystem& node, const NumericTolerance& tol) {
  const auto n = static_cast<Eigen::Index>(node.n());
  Eigen::MatrixXcd pencil = s * Eigen::MatrixXcd::Identity(n, n) - to_eigen_complex(node.A);
  Eigen::MatrixXcd aug(n, n + static_cast<Eigen::Index>(node.p()));
  aug.leftCols(n) = pencil;
  aug.rightCols(node.p()) = to_eigen_complex(node.B);
  return {s, numeric_left_nullspace(pencil, tol), numeric_left_nullspace(aug, tol)};
}

RationalFnData transfer_data(const NodeSystem& node) {
  if (!node.siso()) throw std::invalid_argument("transfer_data requires a SISO node");
  CharPolyAdjugate fl = faddeev_leverrier(node.A);
  RationalFnData d;
  d.chi = fl.chi;
  d.c_adj = PolyMatrix(node.C) * fl.adjugate;
  d.g = (d.c_adj * PolyMatrix(node.H))(0, 0);
  d.h = (d.c_adj * PolyMatrix(node.B))(0, 0);
  return d;
}

ConditionResult check_T8_i(const AssembledSystem& sys) {
  if (!siso_battery_applies(sys)) return siso_not_applicable("T8.i", sys);
  if (is_controllable(sys.node.A, sys.node.H)) return result("T8.i", Status::holds, "(A,H) is controllable");
  ConditionResult r = result("T8.i", Status::fails, "(A,H) is uncontrollable");
  r.evidence = witness_evidence(sys.node.A, sys.node.H);
  return r;
}

ConditionResult check_T8_ii(const AssembledSystem& sys) {
  if (!siso_battery_applies(sys)) return siso_not_applicable("T8.ii", sys);
  if (is_observable(sys.node.A, sys.node.C)) return result("T8.ii", Status::holds, "(A,C) is observable");
  ConditionResult r = result("T8.ii", Status::fails, "(A,C) is unobservable");
  Evidence ev = witness_evidence(sys.node.A.transpose(), sys.node.C.transpose());
  if (ev.vector) ev.vector = ev.vector->transpose();
  r.evidence = std::move(ev);
  return r;
}

ConditionResult check_T8_iii(const AssembledSystem& sys, const NumericTolerance& tol) {
  if (!siso_battery_applies(sys)) return siso_not_applicable("T8.iii", sys);
  const NodeSystem& node = sys.node;
  const RMatrix& L = sys.topo.L;
  const std::size_t N = sys.topo.N();
  const std::size_t n = node.n();
  const SpectrumReport sp = spectrum(node.A);

  // Unknowns: coefficients of each column of kappa in its admissible basis.
  // Row (i, v) of the coefficient matrix is the contribution of alpha_i = v
  // to kappa L, whose column j is sum_i L(i, j) alpha_i^T.
  std::vector<Rational> exact = sp.exact_roots;
  exact.erase(std::unique(exact.begin(), exact.end()), exact.end());
  for (const auto& s : exact) {
    const GammaBasis gb = gamma_basis(s, node);
    std::vector<std::pair<std::size_t, RMatrix>> unknowns;
    for (std::size_t i = 0; i < N; ++i) {
      const RMatrix& basis = sys.topo.delta[i] ? gb.basis2 : gb.basis1;
      for (std::size_t r = 0; r < basis.rows(); ++r) unknowns.emplace_back(i, basis.row(r));
    }
    if (unknowns.empty()) continue;
    RMatrix M(unknowns.size(), N * n);
    for (std::size_t r = 0; r < unknowns.size(); ++r) {
      const auto& [i, v] = unknowns[r];
      for (std::size_t j = 0; j < N; ++j) {
        if (L(i, j) == 0) continue;
        for (std::size_t k = 0; k < n; ++k) M(r, j * n + k) = L(i, j) * v(0, k);
      }
    }
    RMatrix kernel = left_nullspace(M);
    if (kernel.rows() == 0) continue;
    RMatrix kappa(n, N);
    for (std::size_t r = 0; r < unknowns.size(); ++r) {
      const auto& [i, v] = unknowns[r];
      for (std::size_t k = 0; k < n; ++k) kappa(k, i) += kernel(0, r) * v(0, k);
    }
    ConditionResult res = result("T8.iii", Status::fails, "nonzero admissible kappa with kappa L = 0 at s = " + to_string(s));
    Evidence ev;
    ev.roots = {s};
    ev.vector = kappa;
    res.evidence = std::move(ev);
    return res;
  }

  std::vector<Complex> numeric;
  for (Complex z : sp.numeric_roots)
    if (std::none_of(numeric.begin(), numeric.end(), [&](Complex w) { return same_point(z, w); })) numeric.push_back(z);
  const Eigen::MatrixXcd Lc = to_eigen_complex(L);
  for (Complex s : numeric) {
    const NumericGammaBasis gb = gamma_basis(s, node, tol);
    std::vector<std::pair<std::size_t, Eigen::RowVectorXcd>> unknowns;
    for (std::size_t i = 0; i < N; ++i) {
      const Eigen::MatrixXcd& basis = sys.topo.delta[i] ? gb.basis2 : gb.basis1;
      for (Eigen::Index r = 0; r < basis.rows(); ++r) unknowns.emplace_back(i, basis.row(r));
    }
    if (unknowns.empty()) continue;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(unknowns.size()), static_cast<Eigen::Index>(N * n));
    for (std::size_t r = 0; r < unknowns.size(); ++r) {
      const auto& [i, v] = unknowns[r];
      for (std::size_t j = 0; j < N; ++j)
        M.block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j * n), 1, static_cast<Eigen::Index>(n)) =
            Lc(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * v;
    }
    if (num_rank(M, tol) < unknowns.size()) {
      ConditionResult res = result("T8.iii", Status::fails, "numeric admissible kappa with kappa L = 0");
      res.confidence = Confidence::numeric;
      Evidence ev;
      ev.numeric_points = {s};
      res.evidence = std::move(ev);
      return res;
    }
  }
  ConditionResult res = result("T8.iii", Status::holds, "kappa L = 0 forces kappa = 0 at every eigenvalue of A");
  if (!numeric.empty()) res.confidence = Confidence::numeric;
  return res;
}

namespace {

// Shared tail of the two rank-locus tests: d is the stripped minor gcd.
ConditionResult locus_result(std::string id, const Poly& d, std::string holds_note) {
  Evidence ev;
  ev.polynomial = d;
  if (!d.is_zero() && d.degree() == 0) {
    ConditionResult r = result(std::move(id), Status::holds, std::move(holds_note));
    r.evidence = std::move(ev);
    return r;
  }
  ConditionResult r;
  r.id = std::move(id);
  r.status = Status::fails;
  if (d.is_zero()) {
    r.note = "rank is deficient for every s";
  } else {
    RationalRoots split = rational_roots(d);
    ev.roots = split.roots;
    ev.roots.erase(std::unique(ev.roots.begin(), ev.roots.end()), ev.roots.end());
    ev.numeric_points = polynomial_roots(split.quotient);
    r.note = "rank drops at the roots of " + d.to_string();
  }
  r.evidence = std::move(ev);
  return r;
}

}  // namespace

ConditionResult check_T8_iv(const AssembledSystem& sys) {
  if (!siso_battery_applies(sys)) return siso_not_applicable("T8.iv", sys);
  const RationalFnData tf = transfer_data(sys.node);
  if (tf.g.is_zero()) return result("T8.iv", Status::holds, "gamma is identically zero");
  const std::size_t N = sys.topo.N();
  // [chi I - g L, h Delta] has the rank of [I - L gamma, Delta eta] off sigma(A).
  PolyMatrix P(N, 2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      Poly e = tf.g * Rational(-sys.topo.L(i, j));
      if (i == j) e += tf.chi;
      P(i, j) = std::move(e);
    }
    if (sys.topo.delta[i]) P(i, N + i) = tf.h;
  }
  return locus_result("T8.iv", rank_locus(P, tf.chi), "rank(I - L gamma, Delta eta) = N for every s outside sigma(A)");
}

ConditionResult check_T8(const AssembledSystem& sys, const NumericTolerance& tol) {
  if (!siso_battery_applies(sys)) return siso_not_applicable("T8", sys);
  const ConditionResult parts[] = {check_T8_i(sys), check_T8_ii(sys), check_T8_iii(sys, tol), check_T8_iv(sys)};
  ConditionResult r = result("T8", Status::holds);
  std::vector<std::string> failing;
  for (const auto& p : parts) {
    if (p.confidence == Confidence::numeric) r.confidence = Confidence::numeric;
    if (p.status == Status::fails) failing.push_back(p.id);
  }
  if (failing.empty()) {
    r.note = "conditions (i)-(iv) hold: controllable";
    return r;
  }
  r.status = Status::fails;
  r.note = "failing:";
  for (const auto& f : failing) r.note += " " + f;
  r.note += ": uncontrollable";
  for (const auto& p : parts)
    if (p.status == Status::fails && p.evidence) {
      r.evidence = p.evidence;
      break;
    }
  return r;
}

ConditionResult check_chain(const AssembledSystem& sys) {
  const TopologyClass tc = classify(sys.topo);
  if (tc.kind != TopologyKind::chain) return result("C12-chain", Status::not_applicable, std::string("topology is ") + to_string(tc.kind));
  if (!sys.node.siso()) return result("C12-chain", Status::not_applicable, "node is not SISO");
  const auto inputs = sys.topo.inputs();
  if (inputs.size() != 1 || inputs.front() != *tc.root)
    return result("C12-chain", Status::not_applicable, "inputs are not exactly the chain root");

  std::vector<std::string> failing;
  if (!is_controllable(sys.node.A, sys.node.B)) failing.push_back("(A,B) uncontrollable");
  if (!is_controllable(sys.node.A, sys.node.H)) failing.push_back("(A,H) uncontrollable");
  if (!is_observable(sys.node.A, sys.node.C)) failing.push_back("(A,C) unobservable");
  if (failing.empty()) return result("C12-chain", Status::holds, "(A,B), (A,H) controllable and (A,C) observable");
  std::string note;
  for (const auto& f : failing) note += (note.empty() ? "" : "; ") + f;
  return result("C12-chain", Status::fails, note);
}

ConditionResult check_cycle(const AssembledSystem& sys) {
  const TopologyClass tc = classify(sys.topo);
  if (tc.kind != TopologyKind::cycle) return result("T9-cycle", Status::not_applicable, std::string("topology is ") + to_string(tc.kind));
  if (!sys.node.siso()) return result("T9-cycle", Status::not_applicable, "node is not SISO");
  const auto inputs = sys.topo.inputs();
  if (inputs.size() != 1) return result("T9-cycle", Status::not_applicable, "cycle needs exactly one driven node");

  const std::size_t N = sys.topo.N();
  const std::size_t n = sys.node.n();
  // Loop gain is a cyclic product, so the driven node can sit anywhere.
  Rational loop_gain = 1;
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t from = tc.order[k];
    const std::size_t to = tc.order[(k + 1) % N];
    loop_gain *= sys.topo.L(to, from);
  }

  std::vector<std::string> failing;
  if (!is_controllable(sys.node.A, sys.node.H)) failing.push_back("(A,H) uncontrollable");
  if (!is_observable(sys.node.A, sys.node.C)) failing.push_back("(A,C) unobservable");

  const RationalFnData tf = transfer_data(sys.node);
  ConditionResult locus;
  if (tf.g.is_zero()) {
    locus = result("T9-cycle", Status::holds, "gamma is identically zero");
  } else {
    // chi^N [I - b HC (sI - A)^{-1}, B] with b = loop_gain gamma^{N-1}, the
    // scaling applied to the first n columns only.
    const Poly scale = tf.g.pow(static_cast<unsigned>(N - 1)) * loop_gain;
    const Poly chi_n = tf.chi.pow(static_cast<unsigned>(N));
    const PolyMatrix h_c_adj = PolyMatrix(sys.node.H) * tf.c_adj;
    PolyMatrix P(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Poly e = h_c_adj(i, j) * scale * Rational(-1);
        if (i == j) e += chi_n;
        P(i, j) = std::move(e);
      }
      P(i, n) = Poly::constant(sys.node.B(i, 0));
    }
    locus = locus_result("T9-cycle", rank_locus(P, tf.chi),
                         "rank(I - b HC (sI - A)^{-1}, B) = n for every s outside sigma(A)");
    if (locus.status == Status::fails && locus.evidence && !locus.evidence->roots.empty()) {
      const Rational& s0 = locus.evidence->roots.front();
      const Rational gamma = tf.g.eval(s0) / tf.chi.eval(s0);
      Rational b = loop_gain;
      for (std::size_t k = 0; k + 1 < N; ++k) b *= gamma;
      locus.evidence->values = {{"gamma", gamma}, {"b", b}};
    }
    if (locus.status == Status::fails) failing.push_back("rank condition fails (" + locus.note + ")");
  }

  ConditionResult r = result("T9-cycle", failing.empty() ? Status::holds : Status::fails);
  r.evidence = locus.evidence ? *locus.evidence : Evidence{};
  r.evidence->values.insert(r.evidence->values.begin(), {"loop_gain", loop_gain});
  if (failing.empty()) {
    r.note = "(A,H) controllable, (A,C) observable, rank condition holds";
  } else {
    for (const auto& f : failing) r.note += (r.note.empty() ? "" : "; ") + f;
  }
  return r;
}

ConditionResult check_condition(const AssembledSystem& sys, std::string_view id, const NumericTolerance& tol) {
  if (id == "T1") return check_T1(sys);
  if (id == "T2") return check_T2(sys);
  if (id == "T3") return check_T3(sys);
  if (id == "T5") return check_T5(sys);
  if (id == "C6") return check_C6(sys);
  if (id == "C10") return check_star(sys);
  if (id == "T8.i") return check_T8_i(sys);
  if (id == "T8.ii") return check_T8_ii(sys);
  if (id == "T8.iii") return check_T8_iii(sys, tol);
  if (id == "T8.iv") return check_T8_iv(sys);
  if (id == "T8") return check_T8(sys, tol);
  if (id == "C12-chain") return check_chain(sys);
  if (id == "T9-cycle") return check_cycle(sys);
  throw std::invalid_argument("unknown condition id '" + std::string(id) + "'");
}

Certification certify(const AssembledSystem& sys, const NumericTolerance& tol) {
  Certification c;
  for (const auto& id : condition_ids()) c.conditions.push_back(check_condition(sys, id, tol));
  c.direct = networked_controllable(sys, tol);
  for (const auto& r : c.conditions) {
    if (is_necessary_condition(r.id) && r.status == Status::fails && c.direct.controllable) {
      c.contradictions.push_back(r.id + " fails but the direct test reports controllable");
    }
    if (is_characterization(r.id) && r.status != Status::not_applicable &&
        (r.status == Status::holds) != c.direct.controllable) {
      c.contradictions.push_back(r.id + " reports " + (r.status == Status::holds ? "controllable" : "uncontrollable") +
                                 " but the direct test disagrees");
    }
  }
  return c;
}

}  // namespace netctrl
