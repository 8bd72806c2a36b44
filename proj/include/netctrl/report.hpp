#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "netctrl/spec_io.hpp"
#include "netctrl/structural.hpp"
#include "netctrl/theorems.hpp"

namespace netctrl {

struct Report {
  std::string name;
  Verdict verdict;
  TopologyClass topology_class;
  StructuralReport structural;
  std::optional<Certification> certification;  // absent with --no-certify
  std::optional<double> timing_ms;             // only when requested
};

/// assemble -> networked_controllable -> classify -> structural -> certify.
Report analyze(const NetworkSpec& spec, const NumericTolerance& tol = {}, bool with_certify = true);

/// Keys are sorted and rationals are "p/q" strings, so equal inputs give
/// byte-identical dumps. Node labels are 1-based.
nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const ConditionResult& c);
nlohmann::json to_json(const StructuralReport& s);
nlohmann::json to_json(const TopologyClass& t);
nlohmann::json to_json(const Verdict& v);

std::string render_text(const Report& r);
std::string render_condition(const ConditionResult& c);
std::string render_structural(const StructuralReport& s, const TopologyClass& t);

}  // namespace netctrl
