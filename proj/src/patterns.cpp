#include "sip3/patterns.hpp"

namespace sip3::patterns {

Graph k(int n) {
  std::vector<VertexPair> es;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) es.emplace_back(i, j);
  return Graph(n, es);
}

const Graph& k3() {
  static const Graph g = k(3);
  return g;
}

const Graph& k4() {
  static const Graph g = k(4);
  return g;
}

const Graph& k5() {
  static const Graph g = k(5);
  return g;
}

const Graph& k222() {
  // Partition classes {0,1}, {2,3}, {4,5}; edges between distinct classes.
  static const Graph g = [] {
    std::vector<VertexPair> es;
    for (int i = 0; i < 6; i++)
      for (int j = i + 1; j < 6; j++)
        if (j != i + 1 || i % 2 != 0) es.emplace_back(i, j);
    return Graph(6, es);
  }();
  return g;
}

const Graph& v8() {
  static const Graph g = [] {
    std::vector<VertexPair> es;
    for (int i = 0; i < 8; i++) es.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; i++) es.emplace_back(i, i + 4);
    return Graph(8, es);
  }();
  return g;
}

const Graph& c5xc2() {
  static const Graph g = [] {
    std::vector<VertexPair> es;
    for (int i = 0; i < 5; i++) {
      es.emplace_back(i, (i + 1) % 5);
      es.emplace_back(5 + i, 5 + (i + 1) % 5);
      es.emplace_back(i, 5 + i);
    }
    return Graph(10, es);
  }();
  return g;
}

const Graph& winged_k5() {
  // w1=0, w2=1; K4 on {2,3,4,5}; w1 ~ w2,w3,w4 and w2 ~ w5,w6.
  static const Graph g = [] {
    std::vector<VertexPair> es = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
    for (int i = 2; i < 6; i++)
      for (int j = i + 1; j < 6; j++) es.emplace_back(i, j);
    return Graph(6, es);
  }();
  return g;
}

const Graph& winged_k222() {
  // Split one vertex of K_{2,2,2} into w1=0, w2=1; vertex 2 is the split
  // vertex's non-neighbor, classes {3,4} and {5,6} are its neighbors.
  // w1 takes one neighbor from each class, w2 the other two, so that every
  // K_{2,2,2} minor must contract w1w2 (gated by an oracle test).
  static const Graph g = [] {
    std::vector<VertexPair> es = {{0, 1}, {0, 3}, {0, 5}, {1, 4}, {1, 6},
                                  {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                  {3, 5}, {3, 6}, {4, 5}, {4, 6}};
    return Graph(7, es);
  }();
  return g;
}

}  // namespace sip3::patterns
