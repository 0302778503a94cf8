#pragma once

#include "sip3/graph.hpp"

namespace sip3 {

/// Named pattern graphs used by the minor tests.
///
/// V8 is the 8-vertex Wagner graph (cycle plus diameters); C5xC2 is the
/// pentagonal prism.  The winged patterns are the two graphs whose forbidden
/// minors all contract the marked edge w1w2 (w1 = vertex 0, w2 = vertex 1);
/// the test suite gates both fixtures on that property.
namespace patterns {

Graph k(int n);  // complete graph
const Graph& k3();
const Graph& k4();
const Graph& k5();
const Graph& k222();
const Graph& v8();
const Graph& c5xc2();
const Graph& winged_k5();    // 6 vertices, w1w2 = edge {0,1}
const Graph& winged_k222();  // 7 vertices, w1w2 = edge {0,1}

}  // namespace patterns
}  // namespace sip3
