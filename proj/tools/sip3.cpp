#include "sip3/certificates.hpp"
#include "sip3/decomposition.hpp"
#include "sip3/fixtures.hpp"
#include "sip3/flattenability.hpp"
#include "sip3/io.hpp"
#include "sip3/minors.hpp"
#include "sip3/patterns.hpp"
#include "sip3/realize.hpp"
#include "sip3/sip.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sip3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

VertexPair parse_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("expected 'u,v', got '" + s + "'");
  return VertexPair(std::stoi(s.substr(0, comma)),
                    std::stoi(s.substr(comma + 1)));
}

Graph named_pattern(const std::string& name) {
  if (name == "k3") return patterns::k3();
  if (name == "k4") return patterns::k4();
  if (name == "k5") return patterns::k5();
  if (name == "k222") return patterns::k222();
  if (name == "v8") return patterns::v8();
  if (name == "c5xc2") return patterns::c5xc2();
  if (name == "winged-k5") return patterns::winged_k5();
  if (name == "winged-k222") return patterns::winged_k222();
  // Fall back to a graph file.
  return parse_graph(read_file(name));
}

long long budget_from_env() {
  if (const char* s = std::getenv("SIP3_BUDGET")) return std::atoll(s);
  return kDefaultMinorBudget;
}

std::string vertex_set_str(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : to_vector(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void print_minor_map(const MinorMap& m, const std::vector<int>* to_host) {
  for (int p = 0; p < m.pattern.vertex_count(); ++p) {
    VertexSet b = m.branch(p);
    if (to_host) {
      VertexSet lifted = 0;
      for (int v : to_vector(b))
        lifted |= bit((*to_host)[static_cast<size_t>(v)]);
      b = lifted;
    }
    std::cout << "  branch " << p << " -> " << vertex_set_str(b) << "\n";
  }
}

std::string interval_set_str(const IntervalSet& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.intervals.size(); ++i) {
    if (i) out << ",";
    out << "[" << s.intervals[i].lo << "," << s.intervals[i].hi << "]";
  }
  out << "}";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-single-interval-property toolkit (d <= 3)"};
  app.require_subcommand(1);
  long long budget = budget_from_env();

  std::string graph_path, linkage_path, pattern_name, nonedge_str, edge_str;
  std::string out_path;
  std::vector<std::string> pin_strs, preserve_strs, retain_strs;
  int dim = 3, samples = 2000;
  std::uint64_t seed = 7;
  double gap = kDefaultClusterGap;
  bool induced = false, partial = false;

  auto* atoms = app.add_subcommand("atoms", "clique-separator decomposition");
  atoms->add_option("graph", graph_path)->required();

  auto* minor = app.add_subcommand("minor", "rooted minor search");
  minor->add_option("graph", graph_path)->required();
  minor->add_option("pattern", pattern_name,
                    "k3|k4|k5|k222|v8|c5xc2|winged-k5|winged-k222 or file")
      ->required();
  minor->add_option("--pin", pin_strs, "pattern,host vertex pin");
  minor->add_option("--preserve", preserve_strs, "host pair u,v to preserve");
  minor->add_option("--retain", retain_strs, "host pair u,v to retain");
  minor->add_flag("--induced", induced);
  minor->add_flag("--partial", partial, "allow unused host vertices");

  auto* flatten = app.add_subcommand("flatten", "d-flattenability");
  flatten->add_option("graph", graph_path)->required();
  flatten->add_option("--dim", dim)->check(CLI::Range(1, 3));

  auto* p3t = app.add_subcommand("p3t", "partial-3-tree recognition");
  p3t->add_option("graph", graph_path)->required();

  auto* sip = app.add_subcommand("sip", "d-single-interval property");
  sip->add_option("graph", graph_path)->required();
  sip->add_option("--nonedge", nonedge_str)->required();
  sip->add_option("--dim", dim)->check(CLI::Range(1, 3));

  auto* edge_type = app.add_subcommand("edge-type", "edge type 1-4");
  edge_type->add_option("graph", graph_path)->required();
  edge_type->add_option("--nonedge", nonedge_str)->required();
  edge_type->add_option("--edge", edge_str)->required();

  auto* minimal = app.add_subcommand("minimal", "minimal-pair test");
  minimal->add_option("graph", graph_path)->required();
  minimal->add_option("--nonedge", nonedge_str)->required();

  auto* winged = app.add_subcommand("winged", "winged minor search");
  winged->add_option("graph", graph_path)->required();
  winged->add_option("--nonedge", nonedge_str)->required();

  auto* ccs = app.add_subcommand("ccs", "sampled Cayley configuration space");
  ccs->add_option("linkage", linkage_path, "linkage JSON file")->required();
  ccs->add_option("--nonedge", nonedge_str)->required();
  ccs->add_option("--dim", dim)->check(CLI::Range(1, 4));
  ccs->add_option("--samples", samples);
  ccs->add_option("--seed", seed);
  ccs->add_option("--gap", gap);

  auto* certify = app.add_subcommand("certify", "build a non-3-SIP map");
  certify->add_option("graph", graph_path)->required();
  certify->add_option("--nonedge", nonedge_str)->required();
  certify->add_option("--out", out_path, "write certificate JSON here");

  auto* verify = app.add_subcommand("verify-cert", "re-check a certificate");
  verify->add_option("certificate", linkage_path, "certificate JSON file")
      ->required();
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "fixture corpus");
  fixtures_cmd->add_option("--out", out_path, "write .g files to directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*atoms) {
      Graph g = load_graph(graph_path);
      AtomDecomposition dec = decompose_atoms(g);
      std::cout << "atoms:\n";
      for (VertexSet a : dec.atoms)
        std::cout << "  " << vertex_set_str(a) << "\n";
      std::cout << "clique minimal separators:\n";
      for (VertexSet c : dec.cms_list)
        std::cout << "  " << vertex_set_str(c) << "\n";
      AtomGraph ag = atom_graph(dec);
      std::cout << "atom graph is " << (ag.is_tree() ? "a tree" : "not a tree")
                << "\n";
      return 0;
    }
    if (*minor) {
      Graph host = load_graph(graph_path);
      Graph pat = named_pattern(pattern_name);
      MinorConstraints c;
      c.induced = induced;
      c.require_total = !partial;
      for (const auto& s : pin_strs) {
        auto comma = s.find(',');
        if (comma == std::string::npos)
          throw std::runtime_error("--pin expects 'pattern,host'");
        int p = std::stoi(s.substr(0, comma));
        int h = std::stoi(s.substr(comma + 1));
        c.pins.emplace_back(h, p);
      }
      for (const auto& s : preserve_strs) c.preserve.push_back(parse_pair(s));
      for (const auto& s : retain_strs) c.retain.push_back(parse_pair(s));
      auto m = find_rooted_minor(host, pat, c, budget);
      if (!m) {
        std::cout << "none\n";
        return 1;
      }
      std::cout << "minor found\n";
      print_minor_map(*m, nullptr);
      return 0;
    }
    if (*flatten) {
      bool yes = is_d_flattenable(load_graph(graph_path), dim, budget);
      std::cout << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    }
    if (*p3t) {
      bool yes = is_partial_3_tree(load_graph(graph_path), budget);
      std::cout << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    }
    if (*sip) {
      Graph g = load_graph(graph_path);
      SipVerdict v = decide_sip(g, parse_pair(nonedge_str), dim, budget);
      if (v.answer) {
        std::cout << "yes\n";
        return 0;
      }
      std::cout << "no\n";
      std::cout << "atom " << vertex_set_str(*v.atom)
                << " has a nonedge-preserving forbidden "
                << (v.witness->pattern.vertex_count() == 5 ? "K5" : "K2,2,2")
                << " minor:\n";
      print_minor_map(*v.witness, &*v.witness_to_host);
      return 1;
    }
    if (*edge_type) {
      Graph g = load_graph(graph_path);
      EdgeType t = classify_edge(g, parse_pair(nonedge_str),
                                 parse_pair(edge_str), budget);
      std::cout << "type " << static_cast<int>(t)
                << (t == EdgeType::reducing ? " (reducing)" : "") << "\n";
      return 0;
    }
    if (*minimal) {
      bool yes =
          is_minimal_pair(load_graph(graph_path), parse_pair(nonedge_str),
                          budget);
      std::cout << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    }
    if (*winged) {
      Graph g = load_graph(graph_path);
      auto m = find_winged_minor(g, parse_pair(nonedge_str), budget);
      if (!m) {
        std::cout << "none\n";
        return 1;
      }
      std::cout << "winged "
                << (m->pattern.vertex_count() == 6 ? "K5" : "K2,2,2")
                << " minor found\n";
      print_minor_map(*m, nullptr);
      return 0;
    }
    if (*ccs) {
      Linkage l = parse_linkage(read_file(linkage_path));
      IntervalSet s =
          ccs_intervals(l, parse_pair(nonedge_str), dim, samples, seed, gap);
      std::cout << interval_set_str(s) << "\n";
      std::cout << "provenance: sampled(samples=" << s.sample_count
                << ", gap=" << s.cluster_gap << ")\n";
      return 0;
    }
    if (*certify) {
      Graph g = load_graph(graph_path);
      auto cert = build_certificate(g, parse_pair(nonedge_str));
      if (!cert) {
        std::cout << "none\n";
        return 1;
      }
      std::string json = emit_certificate(*cert);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << json;
      }
      std::cout << json;
      return 0;
    }
    if (*verify) {
      Certificate c = parse_certificate(read_file(linkage_path));
      VerifyReport r = verify_certificate(c, samples, seed);
      std::cout << "edges_positive: " << (r.edges_positive ? "yes" : "no")
                << "\nclusters_ok: " << (r.clusters_ok ? "yes" : "no")
                << "\nvalues_match: " << (r.values_match ? "yes" : "no")
                << "\nproper: " << (r.proper ? "yes" : "no")
                << "\nverdict: " << (r.ok() ? "refuted (non-3-SIP confirmed)"
                                            : "not confirmed")
                << "\n";
      return r.ok() ? 0 : 1;
    }
    if (*fixtures_cmd) {
      for (const FixtureEntry& f : fixture_table()) {
        std::cout << f.name;
        if (f.nonedge)
          std::cout << " (nonedge " << f.nonedge->a << "," << f.nonedge->b
                    << ")";
        for (const auto& [k, v] : f.expected)
          std::cout << " " << k << "=" << (v ? "true" : "false");
        std::cout << "\n";
        if (!out_path.empty()) {
          std::filesystem::create_directories(out_path);
          std::ofstream out(std::filesystem::path(out_path) /
                            (f.name + ".g"));
          out << emit_graph(f.graph);
        }
      }
      return 0;
    }
  } catch (const budget_exhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
