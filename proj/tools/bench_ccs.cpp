// Compares the OpenMP-parallel CCS sampler against the serial reference on a
// few fixture linkages and checks the outputs are identical.
#include "sip3/patterns.hpp"
#include "sip3/realize.hpp"

#include <chrono>
#include <cstdio>

using namespace sip3;
using clock_type = std::chrono::steady_clock;

static double run(const char* name, const Linkage& l, const VertexPair& f,
                  int d, int samples) {
  auto t0 = clock_type::now();
  auto par = sample_ccs(l, {f}, d, samples, 42);
  auto t1 = clock_type::now();
  auto ser = sample_ccs_serial(l, {f}, d, samples, 42);
  auto t2 = clock_type::now();
  double tp = std::chrono::duration<double>(t1 - t0).count();
  double ts = std::chrono::duration<double>(t2 - t1).count();
  std::printf("%-12s %6d samples  parallel %7.3fs  serial %7.3fs  x%.2f  %s\n",
              name, samples, tp, ts, ts / tp,
              par == ser ? "identical" : "MISMATCH");
  return ts / tp;
}

int main() {
  Linkage k5mf =
      make_linkage(patterns::k5().without_edge(VertexPair(0, 1)),
                   std::vector<double>(9, 1.0));
  run("k5-unit", k5mf, VertexPair(0, 1), 3, 4000);

  Linkage prism = make_linkage(patterns::c5xc2().without_edge(VertexPair(0, 1)),
                               std::vector<double>(14, 1.0));
  run("prism", prism, VertexPair(0, 1), 3, 2000);

  Linkage v8l = make_linkage(patterns::v8().without_edge(VertexPair(0, 4)),
                             std::vector<double>(11, 1.0));
  run("v8", v8l, VertexPair(0, 4), 3, 2000);
  return 0;
}
