#include "sip3/minors.hpp"

#include "sip3/patterns.hpp"

#include <algorithm>
#include <numeric>

namespace sip3 {

VertexSet MinorMap::branch(int pattern_vertex) const {
  VertexSet s = 0;
  for (size_t v = 0; v < assign.size(); v++)
    if (assign[v] == pattern_vertex) s |= bit((int)v);
  return s;
}

std::vector<VertexPair> MinorMap::deleted_edges() const {
  std::vector<VertexPair> out;
  for (const auto& e : host.edges()) {
    int p = assign[e.a], q = assign[e.b];
    if (p < 0 || q < 0 || (p != q && !pattern.has_edge(p, q)))
      out.push_back(e);
  }
  return out;
}

int MinorMap::crossing_edges(int p, int q) const {
  int count = 0;
  for (const auto& e : host.edges())
    if ((assign[e.a] == p && assign[e.b] == q) ||
        (assign[e.a] == q && assign[e.b] == p))
      count++;
  return count;
}

bool MinorMap::preserves(const VertexPair& f) const {
  return assign[f.a] >= 0 && assign[f.b] >= 0 && assign[f.a] != assign[f.b];
}

bool MinorMap::retains(const VertexPair& f) const {
  if (!preserves(f)) return false;
  int crossing = crossing_edges(assign[f.a], assign[f.b]);
  return crossing <= (host.has_edge(f) ? 1 : 0);
}

bool validate_minor_map(const MinorMap& m, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if ((int)m.assign.size() != m.host.vertex_count())
    return fail("assignment size mismatch");
  int np = m.pattern.vertex_count();
  for (size_t v = 0; v < m.assign.size(); v++)
    if (m.assign[v] < -1 || m.assign[v] >= np)
      return fail("assignment out of range");
  for (int p = 0; p < np; p++) {
    VertexSet b = m.branch(p);
    if (b == 0) return fail("empty branch set");
    if (!m.host.is_connected_within(b)) return fail("disconnected branch set");
  }
  for (const auto& e : m.pattern.edges())
    if (m.crossing_edges(e.a, e.b) == 0)
      return fail("pattern edge with no crossing host edge");
  if (reason) reason->clear();
  return true;
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (const auto& e : g.edges())
      if (!g.has_edge(perm[e.a], perm[e.b])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

struct Searcher {
  const Graph& host;
  const Graph& pattern;
  const MinorConstraints& c;
  long long budget;
  long long nodes = 0;

  int nh, np;
  std::vector<int> order;           // processing order of pattern vertices
  std::vector<VertexSet> pin_mask;  // hosts pinned to each pattern vertex
  VertexSet pinned_hosts = 0;
  std::vector<VertexSet> eq_later;  // per position: later positions in orbit
  std::vector<VertexSet> branches;  // by pattern vertex id

  Searcher(const Graph& h, const Graph& p, const MinorConstraints& cons,
           long long b)
      : host(h), pattern(p), c(cons), budget(b) {
    nh = host.vertex_count();
    np = pattern.vertex_count();
    pin_mask.assign(np, 0);
    for (auto [hv, pv] : c.pins) {
      if (hv < 0 || hv >= nh || pv < 0 || pv >= np)
        throw graph_error("find_rooted_minor: pin out of range");
      if (contains(pinned_hosts, hv) && !contains(pin_mask[pv], hv))
        throw graph_error("find_rooted_minor: host vertex pinned twice");
      pin_mask[pv] |= bit(hv);
      pinned_hosts |= bit(hv);
    }
    // Pinned pattern vertices first, then by decreasing degree.
    order.resize(np);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b2) {
      bool pa = pin_mask[a] != 0, pb = pin_mask[b2] != 0;
      if (pa != pb) return pa;
      return pattern.degree(a) > pattern.degree(b2);
    });
    compute_symmetry();
    branches.assign(np, 0);
  }

  // Stabilizer-chain orbit sets for min-vertex symmetry breaking.  Only
  // automorphisms fixing every pinned pattern vertex are considered.
  void compute_symmetry() {
    auto autos = automorphisms(pattern);
    std::vector<std::vector<int>> group;
    for (const auto& a : autos) {
      bool ok = true;
      for (int p = 0; p < np && ok; p++)
        if (pin_mask[p] != 0 && a[p] != p) ok = false;
      if (ok) group.push_back(a);
    }
    eq_later.assign(np, 0);
    std::vector<std::vector<int>> stab = group;
    for (int k = 0; k < np; k++) {
      for (const auto& a : stab)
        if (a[order[k]] != order[k])
          for (int m = k + 1; m < np; m++)
            if (a[order[k]] == order[m]) eq_later[k] |= bit(m);
      std::vector<std::vector<int>> next;
      for (auto& a : stab)
        if (a[order[k]] == order[k]) next.push_back(std::move(a));
      stab = std::move(next);
    }
  }

  bool pair_inside(VertexSet s) const {
    for (const auto& f : c.preserve)
      if (contains(s, f.a) && contains(s, f.b)) return true;
    for (const auto& f : c.retain)
      if (contains(s, f.a) && contains(s, f.b)) return true;
    return false;
  }

  bool final_check(const std::vector<int>& assign) const {
    MinorMap m{host, pattern, assign};
    for (const auto& f : c.preserve)
      if (!m.preserves(f)) return false;
    for (const auto& f : c.retain)
      if (!m.retains(f)) return false;
    if (c.induced)
      if (!m.deleted_edges().empty()) return false;
    return true;
  }

  std::optional<MinorMap> run() {
    std::optional<MinorMap> result;
    VertexSet free = host.all_vertices();
    place(0, free, result);
    return result;
  }

  void place(int k, VertexSet free, std::optional<MinorMap>& result) {
    if (result) return;
    if (k == np) {
      if (c.require_total && free != 0) return;
      std::vector<int> assign(nh, -1);
      for (int p = 0; p < np; p++)
        for (int v : to_vector(branches[p])) assign[v] = p;
      if (!final_check(assign)) return;
      result = MinorMap{host, pattern, assign};
      return;
    }
    int pv = order[k];
    // Candidate vertices: free, not pinned elsewhere.
    VertexSet avail = free & ~(pinned_hosts & ~pin_mask[pv]);
    VertexSet required = pin_mask[pv];
    if ((required & free) != required) return;  // pinned host already used

    // Symmetry floor: min element must exceed that of earlier orbit-mates.
    int min_floor = -1;
    for (int j = 0; j < k; j++)
      if (contains(eq_later[j], k))
        min_floor = std::max(min_floor, lowest_vertex(branches[order[j]]));

    for (VertexSet s = avail;; s = (s - 1) & avail) {
      if (s != 0) {
        if (++nodes > budget)
          throw budget_exhausted("find_rooted_minor: node budget exhausted");
        if (try_subset(k, pv, s, required, min_floor, free, result)) {
          // candidate explored inside try_subset
        }
        if (result) return;
      }
      if (s == 0) break;
    }
  }

  bool try_subset(int k, int pv, VertexSet s, VertexSet required,
                  int min_floor, VertexSet free,
                  std::optional<MinorMap>& result) {
    if ((s & required) != required) return false;
    if (min_floor >= 0 && lowest_vertex(s) <= min_floor) return false;
    if (popcount(free & ~s) < np - k - 1) return false;  // room for the rest
    if (pair_inside(s)) return false;
    if (!host.is_connected_within(s)) return false;
    // Crossing-edge conditions against already placed branches.
    VertexSet nb = host.open_neighborhood(s);
    for (int j = 0; j < k; j++) {
      int qv = order[j];
      bool adj = pattern.has_edge(pv, qv);
      bool touching = (nb & branches[qv]) != 0;
      if (adj && !touching) return false;
      if (!adj && c.induced && touching) return false;
    }
    branches[pv] = s;
    place(k + 1, free & ~s, result);
    branches[pv] = 0;
    return true;
  }
};

}  // namespace

std::optional<MinorMap> find_rooted_minor(const Graph& host,
                                          const Graph& pattern,
                                          const MinorConstraints& c,
                                          long long budget) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (pattern.vertex_count() == 0)
    throw graph_error("find_rooted_minor: empty pattern");
  Searcher searcher(host, pattern, c, budget);
  return searcher.run();
}

bool has_preserving_forbidden_minor(const Graph& g, const VertexPair& f,
                                    long long budget) {
  MinorConstraints c;
  c.preserve = {f};
  if (find_rooted_minor(g, patterns::k5(), c, budget)) return true;
  return find_rooted_minor(g, patterns::k222(), c, budget).has_value();
}

bool has_minor(const Graph& host, const Graph& pattern, long long budget) {
  MinorConstraints c;
  c.require_total = false;
  return find_rooted_minor(host, pattern, c, budget).has_value();
}

bool brute_force_minor_oracle(const Graph& host, const Graph& pattern,
                              const MinorConstraints& c) {
  int nh = host.vertex_count(), np = pattern.vertex_count();
  if (nh > 10)
    throw graph_error("brute_force_minor_oracle: host too large (> 10)");
  if (np > nh) return false;
  int base = c.require_total ? np : np + 1;
  std::vector<int> assign(nh, 0);
  long long total = 1;
  for (int i = 0; i < nh; i++) total *= base;
  for (long long code = 0; code < total; code++) {
    long long x = code;
    for (int v = 0; v < nh; v++) {
      int d = (int)(x % base);
      assign[v] = d == np ? -1 : d;  // only reachable when not total
      x /= base;
    }
    MinorMap m{host, pattern, assign};
    if (!validate_minor_map(m)) continue;
    bool ok = true;
    for (auto [hv, pv] : c.pins)
      if (assign[hv] != pv) {
        ok = false;
        break;
      }
    for (const auto& f : c.preserve)
      if (ok && !m.preserves(f)) ok = false;
    for (const auto& f : c.retain)
      if (ok && !m.retains(f)) ok = false;
    if (ok && c.induced && !m.deleted_edges().empty()) ok = false;
    if (ok) return true;
  }
  return false;
}

MinorMap apply_exchange(const MinorMap& m, ExchangeKind kind, int a, int b,
                        int x_or_unused, std::optional<int> j_rep,
                        VertexSet k) {
  if (a < 0 || b < 0 || a >= m.pattern.vertex_count() ||
      b >= m.pattern.vertex_count() || a == b)
    throw graph_error("apply_exchange: bad pattern vertices");
  if (!m.pattern.has_edge(a, b))
    throw graph_error("apply_exchange: ab is not a pattern edge");
  VertexSet ba = m.branch(a), bb = m.branch(b);
  MinorMap out = m;

  if (kind == ExchangeKind::vertex) {
    int x = x_or_unused;
    if (!contains(ba, x))
      throw graph_error("apply_exchange: x not in branch(a)");
    if ((m.host.neighbors(x) & bb) == 0)
      throw graph_error("apply_exchange: x has no neighbor in branch(b)");
    auto comps = m.host.components_within(ba & ~bit(x));
    if (comps.empty())
      throw graph_error("apply_exchange: branch(a) minus x is empty");
    VertexSet j = 0;
    if (j_rep) {
      for (VertexSet comp : comps)
        if (contains(comp, *j_rep)) j = comp;
      if (j == 0)
        throw graph_error("apply_exchange: j_rep not in a component of branch(a) minus x");
    } else {
      j = comps.front();
    }
    for (int v : to_vector(ba & ~j)) out.assign[v] = b;
    return out;
  }

  // Component exchange: k must be a connected component of branch(a) minus
  // some connected subgraph J; we check k is connected, inside branch(a),
  // that branch(a) minus k stays connected-compatible with the definition
  // (the remainder is the union of J and the other components), and that k
  // reaches branch(b).
  if (k == 0 || (k & ~ba) != 0)
    throw graph_error("apply_exchange: K not a subset of branch(a)");
  if (!m.host.is_connected_within(k))
    throw graph_error("apply_exchange: K not connected");
  if ((m.host.open_neighborhood(k) & bb) == 0)
    throw graph_error("apply_exchange: K has no neighbor in branch(b)");
  if ((ba & ~k) == 0)
    throw graph_error("apply_exchange: K must be a proper subset of branch(a)");
  // K must be a component of branch(a) minus some connected subgraph J.
  // Such a J exists iff K's boundary inside branch(a) lies in a single
  // component of branch(a) minus K (take J to be that whole component).
  {
    VertexSet boundary = m.host.open_neighborhood(k) & ba;
    bool in_one_component = false;
    for (VertexSet comp : m.host.components_within(ba & ~k))
      if ((boundary & ~comp) == 0) in_one_component = true;
    if (!in_one_component)
      throw graph_error(
          "apply_exchange: K is not a component of branch(a) minus a "
          "connected J");
  }
  for (int v : to_vector(k)) out.assign[v] = b;
  return out;
}

}  // namespace sip3
