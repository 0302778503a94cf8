#pragma once

#include "sip3/certificates.hpp"
#include "sip3/graph.hpp"
#include "sip3/linkage.hpp"

#include <string>

namespace sip3 {

/// Parse error carrying the 1-based offending line.
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

/// Graph text format: '#' comment lines, one `n <count>` header, then
/// `e <u> <v>` lines with 0-based ids in any order.
Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

/// Linkage JSON: {"n": int, "edges": [{"u": int, "v": int, "len2": num}]}.
Linkage parse_linkage(const std::string& json);
std::string emit_linkage(const Linkage& l);

/// Certificate JSON: linkage object plus "f" and "claimed_values".
Certificate parse_certificate(const std::string& json);
std::string emit_certificate(const Certificate& c);

}  // namespace sip3
