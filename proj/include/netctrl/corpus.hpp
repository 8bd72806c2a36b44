#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "netctrl/spec_io.hpp"
#include "netctrl/theorems.hpp"

namespace netctrl {

struct CheckOutcome {
  std::string what;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string quote;  // the recorded statement this check reproduces
};

struct CorpusContext {
  const AssembledSystem& sys;
  const Certification& cert;
};

using CorpusCheck = std::function<CheckOutcome(const CorpusContext&)>;

struct CorpusEntry {
  std::string id;  // "ex1" .. "ex10"
  std::string title;
  NetworkSpec spec;
  std::vector<CorpusCheck> checks;
};

const std::vector<CorpusEntry>& corpus();
/// nullptr for an unknown id.
const CorpusEntry* find_corpus_entry(std::string_view id);

struct CorpusResult {
  std::string id;
  std::vector<CheckOutcome> checks;
  bool pass = true;
};

CorpusResult run_corpus_entry(const CorpusEntry& entry, const NumericTolerance& tol = {});

}  // namespace netctrl
