#include <benchmark/benchmark.h>

#include <random>

#include "orbk/cochain.hpp"
#include "orbk/fusion.hpp"
#include "orbk/poly2.hpp"

using namespace orbk;

namespace {

FiniteGroup group_for(int which) {
  switch (which) {
    case 0: return FiniteGroup::elementary_abelian(2, 3);
    case 1: return FiniteGroup::dihedral(4);
    default: return FiniteGroup::symmetric(4);
  }
}

void BM_Theta(benchmark::State& state) {
  const FiniteGroup g = group_for(static_cast<int>(state.range(0)));
  const auto pg = point_groupoid(g);
  const auto in = inertia(pg);
  std::mt19937_64 rng(1);
  const Cochain phi = random_cochain(pg, 3, 12, rng);
  for (auto _ : state) benchmark::DoNotOptimize(theta(phi, in));
}
BENCHMARK(BM_Theta)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HomotopyIdentity(benchmark::State& state) {
  const FiniteGroup g = group_for(static_cast<int>(state.range(0)));
  const auto pg = point_groupoid(g);
  const auto in = inertia(pg);
  const auto two = k_sectors(pg, 2);
  const auto e1 = evaluation_hom(Evaluation::First, two, in);
  const auto e2 = evaluation_hom(Evaluation::Second, two, in);
  const auto e12 = evaluation_hom(Evaluation::Product, two, in);
  std::mt19937_64 rng(2);
  const Cochain phi = random_cochain(pg, 3, 12, rng);
  for (auto _ : state) {
    const Cochain t = theta(phi, in);
    const bool ok = delta(chain_homotopy(phi, two)) + chain_homotopy(delta(phi), two) ==
                    pullback(e1, t) + pullback(e2, t) - pullback(e12, t);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_HomotopyIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CoboundarySolve(benchmark::State& state) {
  const FiniteGroup g = FiniteGroup::elementary_abelian(2, 3);
  const Cochain phi = bockstein_lift(parse_poly2("x2yz|xy2z|xyz2"), g);
  const Cochain t = shuffle_theta(phi, g, 7);
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_solve(t));
}
BENCHMARK(BM_CoboundarySolve)->Unit(benchmark::kMillisecond);

void BM_IrreducibleBasis(benchmark::State& state) {
  const FiniteGroup g = FiniteGroup::elementary_abelian(2, 3);
  const auto ctx = make_context(g, bockstein_lift(parse_poly2("x2yz|xy2z|xyz2"), g));
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_basis(ctx));
}
BENCHMARK(BM_IrreducibleBasis)->Unit(benchmark::kMillisecond);

void BM_RingAxioms(benchmark::State& state) {
  const FiniteGroup g = FiniteGroup::elementary_abelian(2, 3);
  const auto ctx = make_context(g, bockstein_lift(parse_poly2("x2yz|xy2z|xyz2"), g));
  std::vector<KClass> chars;
  for (const auto& b : irreducible_basis(ctx)) chars.push_back(character(b));
  for (auto _ : state) benchmark::DoNotOptimize(check_ring_axioms(chars, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RingAxioms)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
