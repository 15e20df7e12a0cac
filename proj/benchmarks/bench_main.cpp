#include <benchmark/benchmark.h>

#include "subsetfactor/algebra.hpp"
#include "subsetfactor/cfs.hpp"
#include "subsetfactor/factor.hpp"
#include "subsetfactor/geometry.hpp"
#include "subsetfactor/notation.hpp"

namespace sf = subsetfactor;

namespace {

sf::Group make(const char* text) { return sf::build_group(sf::parse_group_spec(text)); }

void BM_BuildGroup(benchmark::State& state) {
  const auto spec = sf::parse_group_spec("C11xC11");
  for (auto _ : state) benchmark::DoNotOptimize(sf::build_group(spec));
}
BENCHMARK(BM_BuildGroup);

void BM_LeftComplementCyclic(benchmark::State& state) {
  const sf::Group g = make("C60");
  const sf::Subset a = sf::parse_subset(g, "1,a,a^2,a^3");
  for (auto _ : state) benchmark::DoNotOptimize(sf::find_left_complement(g, a));
}
BENCHMARK(BM_LeftComplementCyclic);

void BM_EnumerateAllComplements(benchmark::State& state) {
  const sf::Group g = make("C2xC2xC2xC2");
  const sf::Subset a = sf::parse_subset(g, "1,a,b,c");
  for (auto _ : state) benchmark::DoNotOptimize(sf::search_complement(g, a, sf::Side::left, true));
}
BENCHMARK(BM_EnumerateAllComplements);

void BM_ClassifyHoleWitness(benchmark::State& state) {
  const sf::Group g = make("C11xC11");
  const sf::Subset a = sf::parse_subset(g, "a,b,a^-1,b^-1,a*b,a^-1*b,a*b^-1,a^-1*b^-1,a^2,a^-2,b^2");
  for (auto _ : state) benchmark::DoNotOptimize(sf::classify_factor(g, a));
}
BENCHMARK(BM_ClassifyHoleWitness)->Unit(benchmark::kMicrosecond);

void BM_ExhaustiveNonFactor(benchmark::State& state) {
  const sf::Group g = make("C11xC11");
  const sf::Subset a = sf::parse_subset(g, "a,b,a^-1,b^-1,a*b,a^-1*b,a*b^-1,a^-1*b^-1,a^2,a^-2,b^2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::search_complement(g, a, sf::Side::left));
    benchmark::DoNotOptimize(sf::search_complement(g, a, sf::Side::right));
  }
}
BENCHMARK(BM_ExhaustiveNonFactor)->Unit(benchmark::kMillisecond);

void BM_EnumerateLagrange(benchmark::State& state) {
  const sf::Group g = make("C4xC4");
  const auto level = static_cast<sf::CanonLevel>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::enumerate_lagrange_subsets(g, 4, level));
  state.SetLabel(std::string(sf::to_string(level)));
}
BENCHMARK(BM_EnumerateLagrange)
    ->Arg(static_cast<int>(sf::CanonLevel::none))
    ->Arg(static_cast<int>(sf::CanonLevel::L1))
    ->Arg(static_cast<int>(sf::CanonLevel::L2))
    ->Unit(benchmark::kMillisecond);

void BM_StrongCfs(benchmark::State& state, const char* spec) {
  const sf::Group g = make(spec);
  sf::StrongCfsOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::decide_strong_cfs(g, options));
}
BENCHMARK_CAPTURE(BM_StrongCfs, C2xC2xC2, "C2xC2xC2")->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_StrongCfs, C3xC3, "C3xC3")->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_StrongCfs, C4xC4, "C4xC4")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Cfs(benchmark::State& state) {
  const sf::Group g = make("S4");
  for (auto _ : state) benchmark::DoNotOptimize(sf::decide_cfs(g));
}
BENCHMARK(BM_Cfs)->Unit(benchmark::kMillisecond);

void BM_TildeConstruction(benchmark::State& state) {
  const sf::Group g = make("D9");
  const auto gens = sf::GeneratingSet::standard(g);
  for (auto _ : state) benchmark::DoNotOptimize(sf::construct_tilde(gens, 9));
}
BENCHMARK(BM_TildeConstruction);

}  // namespace

BENCHMARK_MAIN();
