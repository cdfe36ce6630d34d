#include <benchmark/benchmark.h>

#include "cpt/catalog.hpp"
#include "cpt/iso_search.hpp"

namespace {

void BM_Search(benchmark::State& state, const char* a, const char* b, int bound, bool prune) {
  const auto pa = cpt::build_presentation(cpt::parse_family(a));
  const auto pb = cpt::build_presentation(cpt::parse_family(b));
  for (auto _ : state) benchmark::DoNotOptimize(cpt::search(pa, pb, bound, {1, prune}));
}

void BM_Verify(benchmark::State& state) {
  const auto pa = cpt::build_presentation(cpt::parse_family("Xi3:0,1,2"));
  const auto pb = cpt::build_presentation(cpt::parse_family("Xi3:1,1,-2"));
  const auto cert = *cpt::search(pa, pb, 2).certificate;
  for (auto _ : state) benchmark::DoNotOptimize(cpt::verify(cert, pa, pb));
}

}  // namespace

// Exhaustive searches: no certificate exists, every candidate is visited.
BENCHMARK_CAPTURE(BM_Search, eta2_exhausted, "Eta2:0,3", "Eta2:0,-3", 3, true);
BENCHMARK_CAPTURE(BM_Search, zeta3_exhausted, "Zeta3:0,0,1", "Xi3:0,0,0", 2, true);
BENCHMARK_CAPTURE(BM_Search, zeta3_exhausted_unpruned, "Zeta3:0,0,1", "Xi3:0,0,0", 2, false);
BENCHMARK_CAPTURE(BM_Search, m8_vs_n8, "M8:0,2", "N8:2", 3, true);
// First hit.
BENCHMARK_CAPTURE(BM_Search, xi3_found, "Xi3:0,1,2", "Xi3:1,1,-2", 2, true);
BENCHMARK(BM_Verify);
