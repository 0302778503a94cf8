#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sip3/io.hpp"
#include "sip3/patterns.hpp"

using namespace sip3;

TEST_CASE("graph text round trip") {
  for (const Graph* g : {&patterns::k5(), &patterns::k222(), &patterns::v8(),
                         &patterns::winged_k222()}) {
    CHECK(parse_graph(emit_graph(*g)) == *g);
  }
  Graph empty = build_graph(3, {});
  CHECK(parse_graph(emit_graph(empty)) == empty);
}

TEST_CASE("graph text tolerates comments and blank lines") {
  Graph g = parse_graph("# a triangle\n\nn 3\ne 0 1\n# middle\ne 1 2\ne 0 2\n");
  CHECK(g == patterns::k3());
}

TEST_CASE("graph parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const parse_error& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("e 0 1\n") == 1);               // edge before header
  CHECK(line_of("n 3\nn 4\n") == 2);            // duplicate header
  CHECK(line_of("n 3\ne 0 5\n") == 2);          // vertex out of range
  CHECK(line_of("n 3\ne 0 0\n") == 2);          // self loop
  CHECK(line_of("n 3\ne 0 1\ne 1 0\n") == 3);   // duplicate edge
  CHECK(line_of("n 3\ne 0 1 9\n") == 2);        // trailing token
  CHECK(line_of("n 3\nx 0 1\n") == 2);          // unknown directive
  CHECK(line_of("n -2\n") == 1);                // bad count
  CHECK(line_of("") == 0);                      // missing header
}

TEST_CASE("linkage json round trip") {
  Linkage l = make_linkage(patterns::k4().without_edge(VertexPair(0, 1)),
                           {1.0, 2.5, 0.25, 4.0, 1.0});
  Linkage back = parse_linkage(emit_linkage(l));
  CHECK(back.graph == l.graph);
  CHECK(back.len2 == l.len2);
}

TEST_CASE("linkage json accepts edges in any order") {
  Linkage l = parse_linkage(R"({"n": 3, "edges": [
    {"u": 2, "v": 1, "len2": 4.0},
    {"u": 0, "v": 1, "len2": 1.0}]})");
  CHECK(l.length2(VertexPair(0, 1)) == 1.0);
  CHECK(l.length2(VertexPair(1, 2)) == 4.0);
}

TEST_CASE("linkage json rejects malformed input") {
  CHECK_THROWS(parse_linkage("not json"));
  CHECK_THROWS(parse_linkage(R"({"edges": []})"));  // missing n
  CHECK_THROWS(parse_linkage(R"({"n": 2, "edges": [
    {"u": 0, "v": 1, "len2": -1.0}]})"));  // negative squared length
  CHECK_THROWS(parse_linkage(R"({"n": 2, "edges": [
    {"u": 0, "v": 5, "len2": 1.0}]})"));  // out of range
  CHECK_THROWS(parse_linkage(R"({"n": 2, "edges": [
    {"u": 0, "v": 1, "len2": 1.0}, {"u": 1, "v": 0, "len2": 2.0}]})"));
}

TEST_CASE("certificate json round trip") {
  Certificate c = base_certificate(BaseKind::k222);
  Certificate back = parse_certificate(emit_certificate(c));
  CHECK(back.linkage.graph == c.linkage.graph);
  CHECK(back.linkage.len2 == c.linkage.len2);
  CHECK(back.f == c.f);
  REQUIRE(back.values.size() == c.values.size());
  for (size_t i = 0; i < c.values.size(); ++i) {
    CHECK(back.values[i].lo == c.values[i].lo);
    CHECK(back.values[i].hi == c.values[i].hi);
  }
}

TEST_CASE("certificate json rejects an f that is an edge") {
  Certificate c = base_certificate(BaseKind::k5_unit);
  std::string json = emit_certificate(c);
  // Rewrite f to an existing edge.
  auto pos = json.find("\"f\"");
  REQUIRE(pos != std::string::npos);
  CHECK_THROWS(parse_certificate(
      json.replace(json.find('[', pos), json.find(']', pos) - json.find('[', pos) + 1,
                   "[0,2]")));
}
