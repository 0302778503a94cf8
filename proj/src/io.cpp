#include "sip3/io.hpp"

#include <json.hpp>

#include <sstream>

namespace sip3 {

using nlohmann::json;

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<VertexPair> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "n") {
      if (n != -1) throw parse_error(lineno, "duplicate header");
      if (!(ls >> n) || n < 0) throw parse_error(lineno, "bad vertex count");
    } else if (tag == "e") {
      if (n == -1) throw parse_error(lineno, "edge before header");
      int u, v;
      if (!(ls >> u >> v)) throw parse_error(lineno, "bad edge line");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw parse_error(lineno, "vertex id out of range");
      if (u == v) throw parse_error(lineno, "self-loop");
      VertexPair e(u, v);
      for (const VertexPair& prev : edges)
        if (prev == e) throw parse_error(lineno, "duplicate edge");
      edges.push_back(e);
    } else {
      throw parse_error(lineno, "unknown directive '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#')
      throw parse_error(lineno, "trailing tokens");
  }
  if (n == -1) throw parse_error(lineno, "missing header");
  return build_graph(n, edges);
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const VertexPair& e : g.edges())
    out << "e " << e.a << " " << e.b << "\n";
  return out.str();
}

namespace {

Linkage linkage_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::runtime_error("linkage JSON: expected {n, edges}");
  int n = j.at("n").get<int>();
  std::vector<VertexPair> edges;
  std::vector<double> len2;
  for (const json& e : j.at("edges")) {
    int u = e.at("u").get<int>();
    int v = e.at("v").get<int>();
    double l = e.at("len2").get<double>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::runtime_error("linkage JSON: vertex id out of range");
    if (l < 0) throw std::runtime_error("linkage JSON: negative len2");
    edges.emplace_back(u, v);
    len2.push_back(l);
  }
  // Reorder lengths to the graph's canonical edge order.
  Graph g = build_graph(n, edges);
  std::vector<double> ordered(len2.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto& es = g.edges();
    auto it = std::lower_bound(es.begin(), es.end(), edges[i]);
    ordered[static_cast<size_t>(it - es.begin())] = len2[i];
  }
  return make_linkage(std::move(g), std::move(ordered));
}

json linkage_to_json(const Linkage& l) {
  json edges = json::array();
  for (int i = 0; i < l.graph.edge_count(); ++i) {
    const VertexPair& e = l.graph.edges()[static_cast<size_t>(i)];
    edges.push_back(
        {{"u", e.a}, {"v", e.b}, {"len2", l.len2[static_cast<size_t>(i)]}});
  }
  return {{"n", l.graph.vertex_count()}, {"edges", edges}};
}

}  // namespace

Linkage parse_linkage(const std::string& text) {
  return linkage_from_json(json::parse(text));
}

std::string emit_linkage(const Linkage& l) {
  return linkage_to_json(l).dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  json j = json::parse(text);
  Linkage l = linkage_from_json(j);
  const json& f = j.at("f");
  VertexPair fp(f.at(0).get<int>(), f.at(1).get<int>());
  if (fp.b >= l.graph.vertex_count())
    throw std::runtime_error("certificate JSON: f vertex out of range");
  if (l.graph.has_edge(fp))
    throw std::runtime_error("certificate JSON: f is an edge of the linkage");
  std::vector<Interval> values;
  for (const json& v : j.at("claimed_values"))
    values.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  return {std::move(l), fp, std::move(values)};
}

std::string emit_certificate(const Certificate& c) {
  json j = linkage_to_json(c.linkage);
  j["f"] = {c.f.a, c.f.b};
  json vals = json::array();
  for (const Interval& v : c.values) vals.push_back({v.lo, v.hi});
  j["claimed_values"] = vals;
  return j.dump(2) + "\n";
}

}  // namespace sip3
