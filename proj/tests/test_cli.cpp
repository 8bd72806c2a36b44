#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "netctrl/corpus.hpp"
#include "netctrl/spec_io.hpp"

using namespace netctrl;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NETCTRL_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& id) { return std::string(FIXTURE_DIR) + "/" + id + ".json"; }

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("netctrl_test_" + name + ".json");
  std::ofstream(p) << text;
  return p;
}

const char* kTwoNode = R"({
  "name": "t",
  "node": {"A": [[1, 0], [1, 1]], "B": [[1], [0]], "C": [[1, 0]], "H": [[0], [1]]},
  "topology": {"N": 2, "edges": [{"from": 1, "to": 2, "weight": WEIGHT}, {"from": 2, "to": 1, "weight": 1}], "inputs": INPUTS}
})";

std::string two_node(const std::string& weight, const std::string& inputs) {
  std::string s = kTwoNode;
  s.replace(s.find("WEIGHT"), 6, weight);
  s.replace(s.find("INPUTS"), 6, inputs);
  return s;
}

}  // namespace

TEST_CASE("fixtures parse") {
  const NetworkSpec s = parse_spec(fixture("ex2"));
  CHECK(s.node.A == RMatrix{{1, 0}, {1, 1}});
  CHECK(s.node.B == RMatrix{{1}, {0}});
  CHECK(s.node.H == RMatrix{{0}, {1}});
  CHECK(s.node.C == RMatrix{{1, 0}});
  CHECK(s.topo.L == RMatrix{{0, 1}, {1, 0}});
  CHECK(s.topo.delta == std::vector<bool>{true, true});
}

TEST_CASE("fixture files match the built-in corpus") {
  for (const auto& e : corpus()) {
    CAPTURE(e.id);
    const NetworkSpec s = parse_spec(fixture(e.id));
    CHECK(s.node.A == e.spec.node.A);
    CHECK(s.node.B == e.spec.node.B);
    CHECK(s.node.C == e.spec.node.C);
    CHECK(s.node.H == e.spec.node.H);
    CHECK(s.topo.L == e.spec.topo.L);
    CHECK(s.topo.delta == e.spec.topo.delta);
  }
}

TEST_CASE("entries are exact") {
  std::string text = two_node("\"1/3\"", "[1]");
  NetworkSpec s = parse_spec_text(text);
  CHECK(s.topo.L(1, 0) == Rational(1, 3));
  s = parse_spec_text(two_node("0.1", "[1]"));
  CHECK(s.topo.L(1, 0) == Rational(1, 10));
  s = parse_spec_text(two_node("\"-2.5\"", "[1]"));
  CHECK(s.topo.L(1, 0) == Rational(-5, 2));
}

TEST_CASE("round trip") {
  for (const auto& e : corpus()) {
    const NetworkSpec back = parse_spec_text(serialize_spec(e.spec));
    CHECK(back.name == e.spec.name);
    CHECK(back.node.A == e.spec.node.A);
    CHECK(back.node.H == e.spec.node.H);
    CHECK(back.topo.L == e.spec.topo.L);
    CHECK(back.topo.delta == e.spec.topo.delta);
    CHECK(serialize_spec(back) == serialize_spec(e.spec));
  }
}

TEST_CASE("malformed specifications are rejected") {
  CHECK_THROWS_AS(parse_spec_text(two_node("0", "[1]")), SpecError);
  CHECK_THROWS_AS(parse_spec_text(two_node("\"0/5\"", "[1]")), SpecError);
  CHECK_THROWS_AS(parse_spec_text(two_node("1", "[3]")), SpecError);
  CHECK_THROWS_AS(parse_spec_text(two_node("1", "[0]")), SpecError);
  CHECK_THROWS_AS(parse_spec_text(two_node("\"x\"", "[1]")), SpecError);
  CHECK_THROWS_AS(parse_spec_text("{not json"), SpecError);
  CHECK_THROWS_AS(parse_spec(fs::path("/nonexistent/spec.json")), SpecError);

  std::string dup = two_node("1", "[1]");
  dup.replace(dup.find("{\"from\": 2"), 0, "{\"from\": 1, \"to\": 2, \"weight\": 2}, ");
  try {
    parse_spec_text(dup);
    FAIL("duplicate edge accepted");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }

  std::string self = two_node("1", "[1]");
  self.replace(self.find("\"from\": 2, \"to\": 1"), 18, "\"from\": 2, \"to\": 2");
  CHECK_THROWS_AS(parse_spec_text(self), SpecError);

  std::string bad_h = two_node("1", "[1]");
  bad_h.replace(bad_h.find("\"H\": [[0], [1]]"), 15, "\"H\": [[0, 1], [1, 0]]");
  try {
    parse_spec_text(bad_h);
    FAIL("H/C mismatch accepted");
  } catch (const ModelError& e) {
    CHECK(e.diagnostics().front().code == "H/C mismatch");
  }

  try {
    std::string ragged = two_node("1", "[1]");
    ragged.replace(ragged.find("[[1, 0], [1, 1]]"), 16, "[[1, 0], [1]]");
    parse_spec_text(ragged);
    FAIL("ragged matrix accepted");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("node.A[1]") != std::string::npos);
  }
}

TEST_CASE("check exit codes on the corpus") {
  for (const auto& e : corpus()) {
    CAPTURE(e.id);
    const Run r = run("check --no-certify " + fixture(e.id));
    const bool controllable = e.id == "ex4" || e.id == "ex5" || e.id == "ex7" || e.id == "ex9";
    CHECK(r.code == (controllable ? 0 : 1));
  }
  const fs::path bad = write_temp("malformed", "{\"node\": 3}");
  CHECK(run("check " + bad.string()).code == 2);
  CHECK(run("check /nonexistent/file.json").code == 2);
  CHECK(run("check " + fixture("ex5") + " --tol -1").code == 2);
  CHECK(run("bogus").code == 2);
}

TEST_CASE("check reports") {
  Run r = run("check " + fixture("ex7"));
  CHECK(r.code == 0);
  CHECK(r.out.find("controllability rank: 12/12") != std::string::npos);

  r = run("check --json " + fixture("ex8"));
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"]["achieved_rank"] == 5);
  CHECK(j["verdict"]["required_rank"] == 6);
  CHECK(j["contradictions"].empty());
  for (const auto& c : j["conditions"]) {
    if (is_necessary_condition(c["id"].get<std::string>())) CHECK(c["status"] != "fails");
  }

  const Run again = run("check --json " + fixture("ex8"));
  CHECK(again.out == r.out);

  r = run("check --json --no-certify " + fixture("ex6"));
  const auto k = nlohmann::json::parse(r.out);
  CHECK_FALSE(k.contains("conditions"));
  CHECK(k["verdict"]["witness"]["s0"] == "6");
  CHECK_FALSE(k.contains("timing_ms"));
  CHECK(nlohmann::json::parse(run("check --json --timing " + fixture("ex6")).out).contains("timing_ms"));
}

TEST_CASE("assemble and structural") {
  Run r = run("assemble " + fixture("ex8"));
  CHECK(r.code == 0);
  CHECK(r.out.find("Phi") != std::string::npos);
  CHECK(r.out.find("node 3") != std::string::npos);
  r = run("structural " + fixture("ex1"));
  CHECK(r.code == 1);
  CHECK(r.out.find("structurally controllable: no") != std::string::npos);
  CHECK(run("structural " + fixture("ex9")).code == 0);
}

TEST_CASE("certify") {
  Run r = run("certify " + fixture("ex10") + " --theorem T9-cycle");
  CHECK(r.code == 1);
  CHECK(r.out.find("b = -1") != std::string::npos);
  r = run("certify " + fixture("ex9"));
  CHECK(r.code == 0);
  CHECK(r.out.find("contradictions: none") != std::string::npos);
  CHECK(run("certify " + fixture("ex9") + " --theorem nope").code == 2);
}

TEST_CASE("corpus command") {
  Run r = run("corpus list");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);
  r = run("corpus run ex5");
  CHECK(r.code == 0);
  CHECK(r.out.find("4/4") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run("corpus run ex6");
  CHECK(r.code == 0);
  CHECK(run("corpus run").code == 0);
  CHECK(run("corpus run ex99").code == 2);
  r = run("corpus export ex2");
  CHECK(r.code == 0);
  CHECK(parse_spec_text(r.out).topo.L == RMatrix{{0, 1}, {1, 0}});
}
