#include "netctrl/report.hpp"

#include <cstdio>
#include <sstream>

namespace netctrl {

using nlohmann::json;

namespace {

json labels(const std::vector<std::size_t>& nodes) {
  json out = json::array();
  for (std::size_t i : nodes) out.push_back(i + 1);
  return out;
}

json rational_matrix(const RMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json complex_value(Complex z) { return {{"re", fmt_double(z.real())}, {"im", fmt_double(z.imag())}}; }

json complex_matrix(const Eigen::MatrixXcd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_value(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json edges(const std::vector<Edge>& es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back({{"from", e.tail + 1}, {"to", e.head + 1}});
  return out;
}

std::string node_list(const std::vector<std::size_t>& nodes) {
  std::string s;
  for (std::size_t i : nodes) s += (s.empty() ? "" : ", ") + std::to_string(i + 1);
  return s.empty() ? "none" : s;
}

std::string point(const Witness& w) {
  if (w.s0_exact) return to_string(*w.s0_exact);
  std::ostringstream os;
  os << fmt_double(w.s0.real());
  if (w.s0.imag() != 0) os << (w.s0.imag() < 0 ? " - " : " + ") << fmt_double(std::abs(w.s0.imag())) << "i";
  return os.str();
}

}  // namespace

Report analyze(const NetworkSpec& spec, const NumericTolerance& tol, bool with_certify) {
  const AssembledSystem sys = assemble(spec.node, spec.topo);
  Report r;
  r.name = spec.name;
  r.verdict = networked_controllable(sys, tol);
  r.topology_class = classify(spec.topo);
  r.structural = structurally_controllable(spec.topo);
  if (with_certify) r.certification = certify(sys, tol);
  return r;
}

json to_json(const Verdict& v) {
  json out = {
      {"controllable", v.controllable},
      {"achieved_rank", v.achieved_rank},
      {"required_rank", v.required_rank},
      {"confidence", to_string(v.confidence)},
  };
  if (!v.diagnostic.empty()) out["diagnostic"] = v.diagnostic;
  if (v.witness) {
    const Witness& w = *v.witness;
    json wj = {{"confidence", to_string(w.confidence)}, {"residual", fmt_double(w.residual)}};
    if (w.s0_exact) wj["s0"] = to_string(*w.s0_exact);
    else wj["s0"] = complex_value(w.s0);
    if (w.alpha_exact) wj["alpha"] = rational_matrix(*w.alpha_exact)[0];
    else wj["alpha"] = complex_matrix(w.alpha)[0];
    out["witness"] = std::move(wj);
  }
  return out;
}

json to_json(const TopologyClass& t) {
  json out = {{"kind", to_string(t.kind)}, {"leaves", labels(t.leaves)}, {"order", labels(t.order)}};
  out["root"] = t.root ? json(*t.root + 1) : json(nullptr);
  return out;
}

json to_json(const StructuralReport& s) {
  return {
      {"controllable", s.controllable},
      {"dilation_free", s.dilation_free},
      {"accessible", s.accessible},
      {"matching", edges(s.matching.matching)},
      {"unmatched", labels(s.matching.unmatched_nodes)},
      {"perfect_matching", s.matching.is_perfect},
      {"uncovered", labels(s.uncovered)},
      {"unreachable", labels(s.unreachable)},
  };
}

json to_json(const ConditionResult& c) {
  json out = {{"id", c.id}, {"status", to_string(c.status)}, {"confidence", to_string(c.confidence)}, {"note", c.note}};
  if (c.evidence) {
    const Evidence& e = *c.evidence;
    json ej = json::object();
    if (!e.roots.empty()) {
      json roots = json::array();
      for (const auto& r : e.roots) roots.push_back(to_string(r));
      ej["roots"] = std::move(roots);
    }
    if (!e.numeric_points.empty()) {
      json pts = json::array();
      for (Complex z : e.numeric_points) pts.push_back(complex_value(z));
      ej["numeric_points"] = std::move(pts);
    }
    if (e.polynomial) ej["polynomial"] = e.polynomial->to_string();
    if (e.vector) ej["vector"] = rational_matrix(*e.vector);
    if (e.numeric_vector) ej["numeric_vector"] = complex_matrix(*e.numeric_vector);
    if (!e.nodes.empty()) ej["nodes"] = labels(e.nodes);
    for (const auto& [k, v] : e.values) ej["values"][k] = to_string(v);
    out["evidence"] = std::move(ej);
  }
  return out;
}

json to_json(const Report& r) {
  json out = {
      {"name", r.name},
      {"verdict", to_json(r.verdict)},
      {"topology_class", to_json(r.topology_class)},
      {"structural", to_json(r.structural)},
  };
  if (r.certification) {
    json conds = json::array();
    for (const auto& c : r.certification->conditions) conds.push_back(to_json(c));
    out["conditions"] = std::move(conds);
    out["contradictions"] = r.certification->contradictions;
  }
  if (r.timing_ms) out["timing_ms"] = fmt_double(*r.timing_ms);
  return out;
}

std::string render_condition(const ConditionResult& c) {
  std::ostringstream os;
  os << c.id << ": " << to_string(c.status);
  if (c.confidence == Confidence::numeric) os << " (numeric)";
  if (!c.note.empty()) os << "  " << c.note;
  if (c.evidence) {
    const Evidence& e = *c.evidence;
    if (!e.roots.empty()) {
      os << "\n    roots:";
      for (const auto& r : e.roots) os << " " << to_string(r);
    }
    if (!e.numeric_points.empty()) {
      os << "\n    numeric points:";
      for (Complex z : e.numeric_points) os << " (" << fmt_double(z.real()) << ", " << fmt_double(z.imag()) << ")";
    }
    if (e.vector) os << "\n    vector: " << e.vector->to_string();
    if (!e.nodes.empty()) os << "\n    nodes: " << node_list(e.nodes);
    for (const auto& [k, v] : e.values) os << "\n    " << k << " = " << to_string(v);
  }
  return os.str();
}

std::string render_structural(const StructuralReport& s, const TopologyClass& t) {
  std::ostringstream os;
  os << "topology: " << to_string(t.kind);
  if (t.root) os << ", root " << *t.root + 1;
  if (!t.leaves.empty()) os << ", leaves " << node_list(t.leaves);
  os << "\nmaximum matching:";
  if (s.matching.matching.empty()) os << " none";
  for (const Edge& e : s.matching.matching) os << " " << e.tail + 1 << "->" << e.head + 1;
  os << "\nunmatched nodes: " << node_list(s.matching.unmatched_nodes);
  os << "\ndilation-free: " << (s.dilation_free ? "yes" : "no");
  if (!s.uncovered.empty()) os << " (uncovered: " << node_list(s.uncovered) << ")";
  os << "\naccessible: " << (s.accessible ? "yes" : "no");
  if (!s.unreachable.empty()) os << " (unreachable: " << node_list(s.unreachable) << ")";
  os << "\nstructurally controllable: " << (s.controllable ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  if (!r.name.empty()) os << r.name << "\n";
  const Verdict& v = r.verdict;
  os << "controllability rank: " << v.achieved_rank << "/" << v.required_rank << "\n";
  os << "verdict: " << (v.controllable ? "controllable" : "uncontrollable") << "\n";
  if (v.witness) {
    os << "witness: s0 = " << point(*v.witness) << " (" << to_string(v.witness->confidence)
       << ", residual " << fmt_double(v.witness->residual) << ")\n";
    if (v.witness->alpha_exact) os << "  alpha = " << v.witness->alpha_exact->to_string() << "\n";
  }
  os << render_structural(r.structural, r.topology_class);
  if (r.certification) {
    os << "conditions:\n";
    for (const auto& c : r.certification->conditions) os << "  " << render_condition(c) << "\n";
    if (r.certification->contradictions.empty()) {
      os << "contradictions: none\n";
    } else {
      os << "contradictions:\n";
      for (const auto& c : r.certification->contradictions) os << "  " << c << "\n";
    }
  }
  if (r.timing_ms) os << "time: " << fmt_double(*r.timing_ms) << " ms\n";
  return os.str();
}

}  // namespace netctrl
