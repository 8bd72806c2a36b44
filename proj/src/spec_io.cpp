#include "netctrl/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace netctrl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SpecError(where + ": " + what); }

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

Rational entry(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.dump());
    if (v.is_number_float()) return parse_rational(v.dump());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  fail(where, "expected a number or rational string");
}

RMatrix matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a non-empty 2-D array");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rw = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) fail(rw, "expected an array row");
    if (i == 0) cols = v[i].size();
    if (v[i].size() != cols) fail(rw, "ragged row: " + std::to_string(v[i].size()) + " entries, expected " + std::to_string(cols));
  }
  if (cols == 0) fail(where, "rows are empty");
  RMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = entry(v[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  return m;
}

std::size_t node_index(const json& v, std::size_t N, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer node index");
  const auto k = v.get<long long>();
  if (k < 1 || static_cast<std::size_t>(k) > N) fail(where, "node index " + std::to_string(k) + " outside 1.." + std::to_string(N));
  return static_cast<std::size_t>(k - 1);
}

json to_json(const RMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

NetworkSpec parse_spec_text(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string(source) + ": " + e.what());
  }
  NetworkSpec spec;
  const std::string src(source);
  if (!doc.is_object()) fail(src, "top level must be an object");
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    spec.name = it->get<std::string>();
  }

  const json& node = member(doc, "node", src);
  spec.node.A = matrix(member(node, "A", "node"), "node.A");
  spec.node.B = matrix(member(node, "B", "node"), "node.B");
  spec.node.C = matrix(member(node, "C", "node"), "node.C");
  spec.node.H = matrix(member(node, "H", "node"), "node.H");

  const json& topo = member(doc, "topology", src);
  const json& jN = member(topo, "N", "topology");
  if (!jN.is_number_integer() || jN.get<long long>() < 1) fail("topology.N", "expected a positive integer");
  const auto N = static_cast<std::size_t>(jN.get<long long>());
  spec.topo.L = RMatrix(N, N);
  spec.topo.delta.assign(N, false);

  const json& edges = member(topo, "edges", "topology");
  if (!edges.is_array()) fail("topology.edges", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "topology.edges[" + std::to_string(k) + "]";
    const std::size_t from = node_index(member(edges[k], "from", where), N, where + ".from");
    const std::size_t to = node_index(member(edges[k], "to", where), N, where + ".to");
    auto wit = edges[k].find("weight");
    const Rational w = wit == edges[k].end() ? Rational(1) : entry(*wit, where + ".weight");
    if (w == 0) fail(where + ".weight", "edge weights must be nonzero");
    if (from == to) fail(where, "self-loop on node " + std::to_string(from + 1));
    if (!seen.emplace(from, to).second)
      fail(where, "duplicate edge " + std::to_string(from + 1) + " -> " + std::to_string(to + 1));
    spec.topo.L(to, from) = w;
  }

  const json& inputs = member(topo, "inputs", "topology");
  if (!inputs.is_array()) fail("topology.inputs", "expected an array");
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const std::string where = "topology.inputs[" + std::to_string(k) + "]";
    const std::size_t i = node_index(inputs[k], N, where);
    if (spec.topo.delta[i]) fail(where, "node " + std::to_string(i + 1) + " listed twice");
    spec.topo.delta[i] = true;
  }

  if (auto diags = validate(spec.node, spec.topo); !diags.empty()) throw ModelError(std::move(diags));
  return spec;
}

NetworkSpec parse_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str(), path.string());
}

std::string serialize_spec(const NetworkSpec& spec) {
  json edges = json::array();
  const std::size_t N = spec.topo.N();
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < N; ++i)
      if (spec.topo.L(i, j) != 0) edges.push_back({{"from", j + 1}, {"to", i + 1}, {"weight", to_string(spec.topo.L(i, j))}});
  json inputs = json::array();
  for (std::size_t i : spec.topo.inputs()) inputs.push_back(i + 1);
  json doc = {
      {"name", spec.name},
      {"node", {{"A", to_json(spec.node.A)}, {"B", to_json(spec.node.B)}, {"C", to_json(spec.node.C)}, {"H", to_json(spec.node.H)}}},
      {"topology", {{"N", N}, {"edges", std::move(edges)}, {"inputs", std::move(inputs)}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace netctrl
