#include <benchmark/benchmark.h>

#include <random>

#include "cpt/catalog.hpp"
#include "cpt/tower_ring.hpp"

namespace {

cpt::Poly random_element(std::mt19937_64& rng, std::size_t ngens, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-9, 9);
  cpt::Poly p(ngens);
  for (int t = 0; t < 8; ++t) {
    std::vector<cpt::Monomial::Exponent> e(ngens);
    for (auto& x : e) x = exp(rng);
    p.add_term(cpt::Monomial(e), coeff(rng));
  }
  return p;
}

void BM_NormalForm(benchmark::State& state, const char* id) {
  const auto pres = cpt::build_presentation(cpt::parse_family(id));
  std::mt19937_64 rng(7);
  const auto p = random_element(rng, pres.gens, 6);
  for (auto _ : state) benchmark::DoNotOptimize(cpt::normal_form(pres, p));
}

void BM_Multiply(benchmark::State& state, const char* id) {
  const auto pres = cpt::build_presentation(cpt::parse_family(id));
  std::mt19937_64 rng(8);
  const auto a = cpt::normal_form(pres, random_element(rng, pres.gens, 3));
  const auto b = cpt::normal_form(pres, random_element(rng, pres.gens, 3));
  for (auto _ : state) benchmark::DoNotOptimize(cpt::multiply(pres, a, b));
}

void BM_Presentation(benchmark::State& state, const char* id) {
  const auto spec = cpt::build(cpt::parse_family(id));
  for (auto _ : state) benchmark::DoNotOptimize(cpt::presentation(spec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_NormalForm, eta2, "Eta2:1,3");
BENCHMARK_CAPTURE(BM_NormalForm, xi3, "Xi3:0,1,-4");
BENCHMARK_CAPTURE(BM_NormalForm, m8, "M8:1,3");
BENCHMARK_CAPTURE(BM_Multiply, zeta3, "Zeta3:1,1,2");
BENCHMARK_CAPTURE(BM_Multiply, n8, "N8:-2");
BENCHMARK_CAPTURE(BM_Presentation, xi3, "Xi3:1,1,3");
