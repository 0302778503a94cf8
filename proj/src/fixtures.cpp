#include "sip3/fixtures.hpp"

#include "sip3/patterns.hpp"

#include <stdexcept>

namespace sip3 {

namespace {

std::vector<FixtureEntry> build_table() {
  std::vector<FixtureEntry> t;

  t.push_back({"path3",
               build_graph(3, {{0, 1}, {1, 2}}),
               VertexPair(0, 2),
               {{"sip1", false}, {"sip2", true}, {"sip3", true}}});

  t.push_back({"k4_minus_f",
               patterns::k4().without_edge(VertexPair(0, 1)),
               VertexPair(0, 1),
               {{"sip2", false}, {"sip3", true}}});

  t.push_back({"k5_minus_f",
               patterns::k5().without_edge(VertexPair(0, 1)),
               VertexPair(0, 1),
               {{"sip3", false}, {"minimal", true}, {"p3t_union", false}}});

  t.push_back({"k222_minus_f",
               patterns::k222().without_edge(VertexPair(0, 2)),
               VertexPair(0, 2),
               {{"sip3", false}, {"minimal", true}, {"p3t_union", false}}});

  t.push_back({"v8",
               patterns::v8(),
               std::nullopt,
               {{"p3t", false}, {"flatten3", true}}});

  t.push_back({"c5xc2",
               patterns::c5xc2(),
               std::nullopt,
               {{"p3t", false}, {"flatten3", true}}});

  // Winged pairs: the pattern with its marked edge w1 w2 = (0, 1) removed,
  // that pair taken as the nonedge.
  t.push_back({"winged_k5",
               patterns::winged_k5().without_edge(VertexPair(0, 1)),
               VertexPair(0, 1),
               {{"sip3", true}}});
  t.push_back({"winged_k222",
               patterns::winged_k222().without_edge(VertexPair(0, 1)),
               VertexPair(0, 1),
               {{"sip3", true}}});

  // Two squares u x v w sharing the nonedge uv, plus a triangle w h1 h2 with
  // h1, h2 adjacent to v and x: a one-transfer composition over K5.
  t.push_back({"fig16c",
               build_graph(6, {{0, 2},
                               {1, 2},
                               {0, 3},
                               {1, 3},
                               {1, 4},
                               {1, 5},
                               {2, 4},
                               {2, 5},
                               {3, 4},
                               {3, 5},
                               {4, 5}}),
               VertexPair(0, 1),
               {{"sip3", false}, {"minimal", true}}});

  // 3-tree on six vertices (K4 + two simplicial additions) minus one edge.
  Graph tree3 = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                {2, 3}, {1, 4}, {2, 4}, {3, 4}, {2, 5},
                                {3, 5}, {4, 5}});
  t.push_back({"tree3_minus_f",
               tree3.without_edge(VertexPair(0, 3)),
               VertexPair(0, 3),
               {{"sip3", true}, {"p3t_union", true}}});

  return t;
}

}  // namespace

const std::vector<FixtureEntry>& fixture_table() {
  static const std::vector<FixtureEntry> table = build_table();
  return table;
}

const FixtureEntry& fixture(const std::string& name) {
  for (const FixtureEntry& f : fixture_table())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace sip3
