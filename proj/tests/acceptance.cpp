// Acceptance gate: nine end-to-end criteria, one pass/fail line each.
// Exit status is the number of failed criteria.

#include "sip3/certificates.hpp"
#include "sip3/decomposition.hpp"
#include "sip3/fixtures.hpp"
#include "sip3/flattenability.hpp"
#include "sip3/patterns.hpp"
#include "sip3/realize.hpp"
#include "sip3/sip.hpp"

#include "helpers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

using namespace sip3;
using namespace sip3::testing;

namespace {

int g_checks = 0;
int g_failed_checks = 0;

bool expect(bool cond, const char* what) {
  ++g_checks;
  if (!cond) {
    ++g_failed_checks;
    std::printf("    FAILED: %s\n", what);
  }
  return cond;
}

Linkage geometric_linkage(const Graph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<std::array<double, 3>> p(static_cast<size_t>(g.vertex_count()));
  for (auto& pt : p) pt = {u(rng), u(rng), u(rng)};
  std::vector<double> len2;
  for (const VertexPair& e : g.edges()) {
    double s = 0;
    for (int k = 0; k < 3; ++k) {
      double d = p[static_cast<size_t>(e.a)][static_cast<size_t>(k)] -
                 p[static_cast<size_t>(e.b)][static_cast<size_t>(k)];
      s += d * d;
    }
    len2.push_back(s);
  }
  return make_linkage(g, std::move(len2));
}

std::vector<std::pair<double, double>> cluster(std::vector<double> vals,
                                               double gap) {
  std::sort(vals.begin(), vals.end());
  std::vector<std::pair<double, double>> out;
  for (double v : vals) {
    if (out.empty() || v - out.back().second > gap)
      out.emplace_back(v, v);
    else
      out.back().second = v;
  }
  return out;
}

// ---- criterion 1: labeled corpus --------------------------------------

bool criterion1() {
  bool ok = true;
  for (const auto& fx : fixture_table()) {
    for (const auto& [prop, want] : fx.expected) {
      bool got;
      if (prop == "sip1")
        got = decide_sip(fx.graph, *fx.nonedge, 1).answer;
      else if (prop == "sip2")
        got = decide_sip(fx.graph, *fx.nonedge, 2).answer;
      else if (prop == "sip3")
        got = decide_sip(fx.graph, *fx.nonedge, 3).answer;
      else if (prop == "minimal")
        got = is_minimal_pair(fx.graph, *fx.nonedge);
      else if (prop == "p3t")
        got = is_partial_3_tree(fx.graph);
      else if (prop == "p3t_union")
        got = is_partial_3_tree(fx.graph.with_edge(*fx.nonedge));
      else if (prop == "flatten3")
        got = is_d_flattenable(fx.graph, 3);
      else
        got = !want;
      ok &= expect(got == want, (fx.name + "/" + prop).c_str());
    }
  }
  // Random 3-tree minus an edge, that edge as the nonedge: has the property.
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    Graph t = random_3tree(6 + trial % 3, rng);
    std::uniform_int_distribution<int> pick(0, t.edge_count() - 1);
    VertexPair f = t.edges()[static_cast<size_t>(pick(rng))];
    Graph g = t.without_edge(f);
    if (!g.with_edge(f).is_connected()) continue;
    ok &= expect(decide_sip(g, f, 3).answer, "3-tree minus edge is 3-SIP");
  }
  return ok;
}

// ---- criterion 2: minor engine vs brute force -------------------------

bool criterion2() {
  bool ok = true;
  std::vector<const Graph*> pats = {&patterns::k3(), &patterns::k4(),
                                    &patterns::k5(), &patterns::k222()};
  long long disagreements = 0, cases = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& host : connected_class_reps(n)) {
      for (const Graph* pat : pats) {
        for (bool with_preserve : {false, true}) {
          MinorConstraints c;
          if (with_preserve) c.preserve = {VertexPair(0, 1)};
          bool fast = find_rooted_minor(host, *pat, c).has_value();
          bool slow = brute_force_minor_oracle(host, *pat, c);
          ++cases;
          if (fast != slow) ++disagreements;
        }
      }
    }
  }
  std::printf("    %lld host/pattern/constraint cases\n", cases);
  ok &= expect(disagreements == 0, "find_rooted_minor vs brute force");
  ok &= expect(cases >= 1100, "case count sanity");
  return ok;
}

// ---- criterion 3: partial 3-tree recognizer ---------------------------

bool criterion3() {
  bool ok = true;
  long long cases = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : connected_class_reps(n)) {
      ++cases;
      if (is_partial_3_tree(g) != treewidth_at_most(g, 3)) {
        ok &= expect(false, "p3t vs treewidth oracle");
        break;
      }
    }
  std::printf("    %lld connected class representatives\n", cases);
  ok &= expect(cases >= 990, "class count sanity");
  ok &= expect(!is_partial_3_tree(patterns::v8()), "V8 not p3t");
  ok &= expect(!is_partial_3_tree(patterns::c5xc2()), "C5xC2 not p3t");
  std::mt19937_64 rng(103);
  for (int n = 4; n <= 12; ++n) {
    Graph t = random_3tree(n, rng);
    ok &= expect(is_partial_3_tree(t, 4'000'000'000LL), "3-tree is p3t");
  }
  return ok;
}

// ---- criterion 4: K5 certificate geometry -----------------------------

bool criterion4() {
  bool ok = true;
  {
    Certificate c = base_certificate(BaseKind::k5_unit);
    auto samples = sample_ccs(c.linkage, {c.f}, 3, 400, 404);
    std::vector<double> vals;
    for (const auto& v : samples) vals.push_back(v[0]);
    auto cl = cluster(vals, 1e-3);
    ok &= expect(cl.size() == 2, "k5-unit two clusters");
    if (cl.size() == 2) {
      ok &= expect(std::abs(cl[0].first) < 1e-6 && std::abs(cl[0].second) < 1e-6,
                   "k5-unit low cluster = 0");
      ok &= expect(std::abs(cl[1].first - 8.0 / 3.0) < 1e-6 &&
                       std::abs(cl[1].second - 8.0 / 3.0) < 1e-6,
                   "k5-unit high cluster = 8/3");
    }
  }
  {
    Certificate c = base_certificate(BaseKind::k5_proper);
    auto samples = sample_ccs(c.linkage, {c.f}, 3, 400, 405);
    std::vector<double> vals;
    for (const auto& v : samples) vals.push_back(v[0]);
    auto cl = cluster(vals, 1e-3);
    ok &= expect(cl.size() == 2, "k5-proper two clusters");
    if (cl.size() == 2) {
      // Independent closed form: apexes on circles of radius h1 about the
      // axis through the unit triangle's centroid, at height h2.
      double h1 = std::sqrt(2.0 / 3.0);
      double h2 = std::sqrt(4.0 - 1.0 / 3.0);
      double lo = (h2 - h1) * (h2 - h1), hi = (h2 + h1) * (h2 + h1);
      ok &= expect(cl[0].first > 0, "k5-proper clusters positive");
      ok &= expect(cl[1].first - cl[0].second > 1e-3, "k5-proper cluster gap");
      ok &= expect(std::abs(cl[0].first - lo) < 1e-6 &&
                       std::abs(cl[0].second - lo) < 1e-6,
                   "k5-proper low value closed form");
      ok &= expect(std::abs(cl[1].first - hi) < 1e-6 &&
                       std::abs(cl[1].second - hi) < 1e-6,
                   "k5-proper high value closed form");
    }
  }
  return ok;
}

// ---- criterion 5: transfer and decoration lemmas ----------------------

bool criterion5() {
  bool ok = true;
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> len(0.8, 2.5);
  std::uniform_real_distribution<double> bump(0.2, 0.6);

  int transfers = 0;
  while (transfers < 50) {
    TriangleMap m1{len(rng), len(rng), len(rng)};
    TriangleMap m2{m1.s12, m1.s13, m1.s23 + bump(rng)};
    std::pair<Linkage, Linkage> out{Linkage{patterns::k3(), {}},
                                    Linkage{patterns::k3(), {}}};
    try {
      out = transfer_through_k4(m1, m2);
    } catch (const std::exception&) {
      continue;
    }
    ++transfers;
    auto exact = [](const Linkage& l) {
      return apex_pair_interval(
          l.length2(VertexPair(1, 2)), l.length2(VertexPair(1, 3)),
          l.length2(VertexPair(2, 3)), l.length2(VertexPair(0, 2)),
          l.length2(VertexPair(0, 3)), 3);
    };
    IntervalSet s1 = exact(out.first), s2 = exact(out.second);
    ok &= expect(s1.intervals.size() == 1 && s1.width() < 1e-6,
                 "transfer output 1 singleton");
    ok &= expect(s2.intervals.size() == 1 && s2.width() < 1e-6,
                 "transfer output 2 singleton");
    ok &= expect(
        std::abs(s1.intervals[0].lo - s2.intervals[0].lo) > 1e-3,
        "transfer values distinct");
  }

  int decorations = 0;
  while (decorations < 50) {
    TriangleMap m1{len(rng), len(rng), len(rng)};
    TriangleMap m2{m1.s12, m1.s13, m1.s23 + bump(rng)};
    std::pair<Linkage, Linkage> out{Linkage{patterns::k3(), {}},
                                    Linkage{patterns::k3(), {}}};
    try {
      out = decorate_degree3(m1, m2);
    } catch (const std::exception&) {
      continue;
    }
    ++decorations;
    for (const Linkage* l : {&out.first, &out.second}) {
      auto r = realize(*l, 2, 7);
      bool good = r.has_value() && max_residual(*l, *r) <= 1e-8;
      ok &= expect(good, "decorated linkage 2-realizable");
    }
  }
  return ok;
}

// ---- criterion 6: combinatorial-geometric cross validation ------------

bool criterion6() {
  bool ok = true;
  std::mt19937_64 rng(106);

  // Negative side: pairs without the property, certificate built + verified.
  std::vector<std::pair<Graph, VertexPair>> falses;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      falses.emplace_back(patterns::k5().without_edge(VertexPair(a, b)),
                          VertexPair(a, b));
  {
    std::set<std::pair<std::uint64_t, std::pair<int, int>>> seen;
    Graph base = patterns::k222().without_edge(VertexPair(0, 2));
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    while (seen.size() < 12) {
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h = relabel(base, perm);
      VertexPair f(perm[0], perm[2]);
      if (seen.insert({edge_mask(h), {f.a, f.b}}).second)
        falses.emplace_back(h, f);
    }
  }
  int verified = 0;
  for (const auto& [g, f] : falses) {
    if (decide_sip(g, f, 3).answer) continue;
    auto c = build_certificate(g, f);
    if (!c) continue;
    if (verify_certificate(*c).ok()) ++verified;
  }
  std::printf("    %d false pairs certified and verified\n", verified);
  ok &= expect(verified >= 20, "at least 20 verified certificates");
  ok &= expect(verified == static_cast<int>(falses.size()),
               "every constructed false pair verified");

  // Positive side: sampling cannot prove 3-SIP; report single intervals as
  // "not refuted".
  std::vector<std::pair<Graph, VertexPair>> trues;
  for (const char* name : {"path3", "k4_minus_f", "winged_k5", "winged_k222",
                           "tree3_minus_f"}) {
    const auto& fx = fixture(name);
    trues.emplace_back(fx.graph, *fx.nonedge);
  }
  while (trues.size() < 10) {
    Graph t = random_3tree(5 + static_cast<int>(trues.size()) % 2, rng);
    std::uniform_int_distribution<int> pick(0, t.edge_count() - 1);
    VertexPair f = t.edges()[static_cast<size_t>(pick(rng))];
    trues.emplace_back(t.without_edge(f), f);
  }
  int refuted = 0, confirmed_pairs = 0;
  for (const auto& [g, f] : trues) {
    if (!decide_sip(g, f, 3).answer) continue;
    bool single_all = true;
    for (int i = 0; i < 5; ++i) {
      Linkage l = geometric_linkage(g, rng);
      IntervalSet set = ccs_intervals(l, f, 3, 700, 1000 + i);
      if (set.sample_count < 500)
        set = ccs_intervals(l, f, 3, 3000, 2000 + i);
      if (set.sample_count < 500 || set.intervals.size() != 1) {
        single_all = false;
        std::printf("    pair %d linkage %d: %zu intervals, %d samples\n",
                    confirmed_pairs, i, set.intervals.size(),
                    set.sample_count);
      }
    }
    if (single_all)
      ++confirmed_pairs;
    else
      ++refuted;
  }
  std::printf("    %d positive pairs x 5 linkages: single interval"
              " (not refuted)\n",
              confirmed_pairs);
  ok &= expect(confirmed_pairs >= 10 && refuted == 0,
               "positive pairs not refuted by sampling");
  return ok;
}

// ---- criterion 7: gluing lemma ----------------------------------------

bool criterion7() {
  bool ok = true;
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    // Clique-sum over the shared pair {0, 1} (a clique once f is added) of
    // two flexible parts: a 2-path or a K4 minus the shared pair.
    std::uniform_int_distribution<int> kind(0, 1);
    int extra1 = 1 + kind(rng), extra2 = 1 + kind(rng);
    int n = 2 + extra1 + extra2;
    std::vector<VertexPair> e1, e2, whole;
    auto add_part = [&](std::vector<VertexPair>& part, int first, int count) {
      std::vector<int> vs = {0, 1};
      for (int i = 0; i < count; ++i) vs.push_back(first + i);
      for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
          if (!(vs[i] == 0 && vs[j] == 1)) part.emplace_back(vs[i], vs[j]);
      whole.insert(whole.end(), part.begin(), part.end());
    };
    add_part(e1, 2, extra1);
    add_part(e2, 2 + extra1, extra2);
    Graph gw = build_graph(n, whole);
    Linkage lw = geometric_linkage(gw, rng);

    // Part linkages inherit the whole's lengths on their own vertex sets.
    auto part_linkage = [&](const std::vector<VertexPair>& es) {
      VertexSet vs = bit(0) | bit(1);
      for (const auto& e : es) vs |= bit(e.a) | bit(e.b);
      InducedSubgraph sub = induced_subgraph(gw, vs);
      std::vector<double> len2;
      for (const VertexPair& e : sub.graph.edges())
        len2.push_back(lw.length2(
            VertexPair(sub.to_host[static_cast<size_t>(e.a)],
                       sub.to_host[static_cast<size_t>(e.b)])));
      return make_linkage(sub.graph, std::move(len2));
    };
    Linkage l1 = part_linkage(e1), l2 = part_linkage(e2);

    IntervalSet wset = ccs_intervals(lw, VertexPair(0, 1), 3, 2500, 30 + trial);
    IntervalSet glued = glue_intervals(
        {ccs_intervals(l1, VertexPair(0, 1), 3, 2500, 60 + trial),
         ccs_intervals(l2, VertexPair(0, 1), 3, 2500, 90 + trial)});
    bool match = wset.intervals.size() == glued.intervals.size();
    if (match)
      for (size_t i = 0; i < wset.intervals.size(); ++i)
        match = match &&
                std::abs(wset.intervals[i].lo - glued.intervals[i].lo) <= 1e-3 &&
                std::abs(wset.intervals[i].hi - glued.intervals[i].hi) <= 1e-3;
    if (!match)
      std::printf("    trial %d: whole %zu intervals vs glued %zu\n", trial,
                  wset.intervals.size(), glued.intervals.size());
    ok &= expect(match, "whole CCS equals glued C-component CCSs");
  }
  return ok;
}

// ---- criterion 8: star theorem ----------------------------------------

bool criterion8() {
  bool ok = true;
  std::mt19937_64 rng(108);
  int trials = 0, violations = 0;
  while (trials < 100) {
    std::uniform_int_distribution<int> size(5, 9);
    Graph g = random_3tree(size(rng), rng);
    // Occasionally remove an edge, keeping 3-connectivity.
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) {
      std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
      Graph h = g.without_edge(g.edges()[static_cast<size_t>(pick(rng))]);
      if (vertex_connectivity(h) >= 3) g = h;
    }
    std::uniform_int_distribution<int> pickw(0, g.vertex_count() - 1);
    int w = pickw(rng);
    std::vector<int> nonneighbors;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != w && !g.has_edge(w, v)) nonneighbors.push_back(v);
    if (nonneighbors.empty()) continue;
    std::vector<int> leaves;
    for (int v : nonneighbors)
      if (coin(rng) != 0) leaves.push_back(v);
    if (leaves.empty()) leaves.push_back(nonneighbors.front());
    ++trials;
    if (check_star_theorem(g, w, leaves).theorem_violated()) ++violations;
  }
  std::printf("    %d trials, %d violations\n", trials, violations);
  ok &= expect(violations == 0, "no star theorem violation");
  return ok;
}

// ---- criterion 9: decomposition ---------------------------------------

bool criterion9() {
  bool ok = true;
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(4, 10);
    int n = size(rng);
    Graph g = random_chordal(n, rng);
    auto dec = decompose_atoms(g);

    auto atoms = dec.atoms;
    std::sort(atoms.begin(), atoms.end());
    auto cliques = maximal_cliques(g);
    std::sort(cliques.begin(), cliques.end());
    ok &= expect(atoms == cliques, "chordal atoms = maximal cliques");

    // Elimination-order invariance via relabeling.
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto dh = decompose_atoms(relabel(g, perm));
    auto mapped = dec.atoms;
    for (auto& s : mapped) {
      VertexSet t = 0;
      for (int v : to_vector(s)) t |= bit(perm[static_cast<size_t>(v)]);
      s = t;
    }
    std::sort(mapped.begin(), mapped.end());
    auto hatoms = dh.atoms;
    std::sort(hatoms.begin(), hatoms.end());
    ok &= expect(mapped == hatoms, "decomposition invariant to relabeling");

    // Tree structure when no CMS contains another.
    bool nested = false;
    for (const VertexSet a : dec.cms_list)
      for (const VertexSet b : dec.cms_list)
        if (a != b && (a & ~b) == 0) nested = true;
    if (!nested) {
      auto ag = atom_graph(dec);
      ok &= expect(ag.is_tree(), "atom graph is a tree");
      for (int v = 0; v < ag.graph.vertex_count(); ++v)
        if (ag.graph.degree(v) <= 1)
          ok &= expect(v >= ag.cms_count, "atom graph leaves are atoms");
    }
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {1, "labeled corpus", criterion1},
      {2, "minor engine vs brute force", criterion2},
      {3, "partial 3-tree recognizer", criterion3},
      {4, "K5 certificate geometry", criterion4},
      {5, "transfer/decoration", criterion5},
      {6, "cross validation", criterion6},
      {7, "gluing", criterion7},
      {8, "star theorem", criterion8},
      {9, "decomposition", criterion9},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::printf("    EXCEPTION: %s\n", e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("criterion %d (%s): %s  [%.1fs]\n", c.id, c.label,
                ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d/9 criteria passed (%d checks, %d failed)\n", 9 - failures,
              g_checks, g_failed_checks);
  return failures;
}
