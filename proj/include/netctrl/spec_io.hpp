#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "netctrl/model.hpp"

namespace netctrl {

struct NetworkSpec {
  std::string name;
  NodeSystem node;
  Topology topo;
};

/// Malformed input: bad JSON, wrong shapes, duplicate edges and the like.
/// The message names the offending field ("topology.edges[2].weight").
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix entries may be integers, decimal strings or "p/q" strings. JSON
/// floats are accepted and read from their literal text, never rounded.
/// Throws SpecError for format problems and ModelError for a spec that parses
/// but fails validate().
NetworkSpec parse_spec_text(std::string_view text, std::string_view source = "<input>");
NetworkSpec parse_spec(const std::filesystem::path& path);

/// Canonical JSON; rationals are written as "p/q" strings.
std::string serialize_spec(const NetworkSpec& spec);

}  // namespace netctrl
