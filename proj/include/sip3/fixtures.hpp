#pragma once

#include "sip3/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sip3 {

/// Named graph (optionally with a distinguished nonedge) plus the property
/// verdicts the test suite pins it to.  Properties whose expected value was
/// computed rather than hand-checked are re-derived by oracle tests before
/// anything else relies on them.
struct FixtureEntry {
  std::string name;
  Graph graph;
  std::optional<VertexPair> nonedge;
  std::map<std::string, bool> expected;
};

const std::vector<FixtureEntry>& fixture_table();
const FixtureEntry& fixture(const std::string& name);

}  // namespace sip3
