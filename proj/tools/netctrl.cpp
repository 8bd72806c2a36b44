#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "netctrl/corpus.hpp"
#include "netctrl/report.hpp"

using namespace netctrl;

namespace {

constexpr int kControllable = 0;
constexpr int kUncontrollable = 1;
constexpr int kError = 2;

void print_block_matrix(std::ostream& os, const std::string& label, const RMatrix& m, std::size_t row_block,
                        std::size_t col_block) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = to_string(m(i, j));
      width = std::max(width, cells[i * m.cols() + j].size());
    }
  os << label << " (" << m.rows() << "x" << m.cols() << ", blocks " << row_block << "x" << col_block << ")\n";
  const std::size_t blocks = m.cols() / col_block;
  os << "      ";
  for (std::size_t b = 0; b < blocks; ++b) {
    std::ostringstream head;
    head << "node " << b + 1;
    const std::size_t span = col_block * (width + 1);
    os << std::left << std::setw(static_cast<int>(span)) << head.str() << (b + 1 < blocks ? "  " : "");
  }
  os << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0 && i % row_block == 0) os << "\n";
    std::ostringstream tag;
    if (i % row_block == 0) tag << "n" << i / row_block + 1;
    os << std::left << std::setw(6) << tag.str();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0 && j % col_block == 0) os << "| ";
      os << std::right << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j] << " ";
    }
    os << "\n";
  }
}

NumericTolerance make_tol(double rank_tol, double residual_tol) {
  NumericTolerance tol;
  tol.rank_tol = rank_tol;
  tol.residual_tol = residual_tol;
  tol.validate();
  return tol;
}

int cmd_check(const std::string& path, bool as_json, double rank_tol, double residual_tol, bool no_certify,
              bool timing) {
  const NumericTolerance tol = make_tol(rank_tol, residual_tol);
  const NetworkSpec spec = parse_spec(path);
  const auto start = std::chrono::steady_clock::now();
  Report report = analyze(spec, tol, !no_certify);
  if (timing)
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (as_json) std::cout << to_json(report).dump(2) << "\n";
  else std::cout << render_text(report);
  return report.verdict.controllable ? kControllable : kUncontrollable;
}

int cmd_assemble(const std::string& path) {
  const NetworkSpec spec = parse_spec(path);
  const AssembledSystem sys = assemble(spec.node, spec.topo);
  const std::size_t n = sys.node.n();
  print_block_matrix(std::cout, "Phi = I (x) A + L (x) HC", sys.Phi, n, n);
  std::cout << "\n";
  print_block_matrix(std::cout, "Psi = Delta (x) B", sys.Psi, n, sys.node.p());
  return 0;
}

int cmd_structural(const std::string& path) {
  const NetworkSpec spec = parse_spec(path);
  const StructuralReport s = structurally_controllable(spec.topo);
  std::cout << render_structural(s, classify(spec.topo));
  return s.controllable ? kControllable : kUncontrollable;
}

int cmd_certify(const std::string& path, const std::string& theorem, double rank_tol, double residual_tol) {
  const NumericTolerance tol = make_tol(rank_tol, residual_tol);
  const NetworkSpec spec = parse_spec(path);
  const AssembledSystem sys = assemble(spec.node, spec.topo);
  if (!theorem.empty()) {
    const ConditionResult r = check_condition(sys, theorem, tol);
    std::cout << render_condition(r) << "\n";
    return r.status == Status::fails ? 1 : 0;
  }
  const Certification c = certify(sys, tol);
  std::cout << "direct: " << c.direct.achieved_rank << "/" << c.direct.required_rank << " "
            << (c.direct.controllable ? "controllable" : "uncontrollable") << "\n";
  for (const auto& r : c.conditions) std::cout << render_condition(r) << "\n";
  if (c.contradictions.empty()) std::cout << "contradictions: none\n";
  for (const auto& k : c.contradictions) std::cout << "contradiction: " << k << "\n";
  return c.contradictions.empty() ? 0 : 1;
}

int cmd_corpus_list() {
  for (const auto& e : corpus()) std::cout << std::left << std::setw(6) << e.id << e.title << "\n";
  return 0;
}

int cmd_corpus_run(const std::string& id) {
  std::vector<const CorpusEntry*> entries;
  if (id.empty()) {
    for (const auto& e : corpus()) entries.push_back(&e);
  } else if (const CorpusEntry* e = find_corpus_entry(id)) {
    entries.push_back(e);
  } else {
    std::cerr << "error: unknown corpus entry '" << id << "'\n";
    return kError;
  }
  bool all = true;
  std::cout << std::left << std::setw(6) << "id" << std::setw(30) << "check" << std::setw(24) << "expected"
            << std::setw(24) << "computed" << "result\n";
  for (const CorpusEntry* e : entries) {
    const CorpusResult r = run_corpus_entry(*e);
    all = all && r.pass;
    for (const auto& c : r.checks) {
      std::cout << std::left << std::setw(6) << r.id << std::setw(30) << c.what << std::setw(24) << c.expected
                << std::setw(24) << c.computed << (c.pass ? "pass" : "FAIL") << "\n";
      if (!c.pass) std::cout << "      violated: \"" << c.quote << "\"\n";
    }
  }
  return all ? 0 : 1;
}

int cmd_corpus_export(const std::string& id) {
  const CorpusEntry* e = find_corpus_entry(id);
  if (!e) {
    std::cerr << "error: unknown corpus entry '" << id << "'\n";
    return kError;
  }
  std::cout << serialize_spec(e->spec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Controllability analysis of networked linear systems"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false, no_certify = false, timing = false;
  double rank_tol = NumericTolerance{}.rank_tol;
  double residual_tol = NumericTolerance{}.residual_tol;
  std::string theorem;
  std::string corpus_id;

  auto* check = app.add_subcommand("check", "Decide controllability and report the theorem battery");
  check->add_option("file", file, "Network specification (JSON)")->required();
  check->add_flag("--json", as_json, "Machine-readable report");
  check->add_option("--tol", rank_tol, "Relative rank tolerance for numeric steps");
  check->add_option("--residual-tol", residual_tol, "Residual tolerance for numeric witnesses");
  check->add_flag("--no-certify", no_certify, "Skip the theorem battery");
  check->add_flag("--timing", timing, "Include wall-clock time in the report");

  auto* assemble_cmd = app.add_subcommand("assemble", "Print Phi and Psi");
  assemble_cmd->add_option("file", file, "Network specification (JSON)")->required();

  auto* structural = app.add_subcommand("structural", "Structural controllability of the topology");
  structural->add_option("file", file, "Network specification (JSON)")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Evaluate theorem conditions");
  certify_cmd->add_option("file", file, "Network specification (JSON)")->required();
  certify_cmd->add_option("--theorem", theorem, "Single condition id (T1, T2, T3, T5, C6, C10, T8.i..T8.iv, T8, C12-chain, T9-cycle)");
  certify_cmd->add_option("--tol", rank_tol, "Relative rank tolerance for numeric steps");
  certify_cmd->add_option("--residual-tol", residual_tol, "Residual tolerance for numeric witnesses");

  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in example fixtures");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List fixtures");
  auto* corpus_run = corpus_cmd->add_subcommand("run", "Run all fixtures or one");
  corpus_run->add_option("id", corpus_id, "Fixture id, e.g. ex5");
  auto* corpus_export = corpus_cmd->add_subcommand("export", "Print a fixture as a specification file");
  corpus_export->add_option("id", corpus_id, "Fixture id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*check) return cmd_check(file, as_json, rank_tol, residual_tol, no_certify, timing);
    if (*assemble_cmd) return cmd_assemble(file);
    if (*structural) return cmd_structural(file);
    if (*certify_cmd) return cmd_certify(file, theorem, rank_tol, residual_tol);
    if (*corpus_list) return cmd_corpus_list();
    if (*corpus_run) return cmd_corpus_run(corpus_id);
    if (*corpus_export) return cmd_corpus_export(corpus_id);
  } catch (const ModelError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << "error: " << d.code << ": " << d.message << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
