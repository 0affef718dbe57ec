#include <bhk/hodge.hpp>
#include <bhk/shioda.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace bhk;

namespace {

IntMatrix diag(std::initializer_list<long> d) {
  IntMatrix a(d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) a(i, i) = x, ++i;
  return a;
}

OrbifoldDescriptor worked_chain() {
  IntMatrix a = diag({8, 8, 4, 3, 4});
  a(4, 3) = 1;
  return build_orbifold(build_potential(a), {PhaseVector(IntVector{18, 0, 6, 0, 0}, 24),
                                             PhaseVector(IntVector{0, 0, 12, 0, 12}, 24)});
}

void BM_HermiteForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::vector<IntVector> gens(n + 2, IntVector(n));
  for (auto& v : gens)
    for (auto& x : v) x = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_form(gens, 720720, n));
}
BENCHMARK(BM_HermiteForm)->Arg(3)->Arg(5)->Arg(8)->Arg(12);

void BM_DualGroup(benchmark::State& state) {
  const auto orb = worked_chain();
  for (auto _ : state) benchmark::DoNotOptimize(dual_group(orb));
}
BENCHMARK(BM_DualGroup);

void BM_CompareMirrors(benchmark::State& state) {
  const auto a = build_orbifold(build_potential(diag({8, 8, 4, 3, 6})),
                                {PhaseVector(IntVector{18, 0, 6, 0, 0}, 24),
                                 PhaseVector(IntVector{0, 0, 12, 0, 12}, 24)});
  const auto b = worked_chain();
  for (auto _ : state) benchmark::DoNotOptimize(compare_mirrors(a, b));
}
BENCHMARK(BM_CompareMirrors);

void BM_JacobianPiece(benchmark::State& state) {
  const auto p = build_potential(diag({8, 8, 4, 3, 6}));
  const std::vector<std::size_t> all{0, 1, 2, 3, 4};
  const auto r = restrict_potential(p, all);
  for (auto _ : state)
    benchmark::DoNotOptimize(graded_jacobian_dim(r, state.range(0), CharacterConstraint::trivial()));
}
BENCHMARK(BM_JacobianPiece)->Arg(24)->Arg(48);

void BM_ChenRuan(benchmark::State& state) {
  const auto orb = mirror_orbifold(worked_chain());
  for (auto _ : state) benchmark::DoNotOptimize(cr_diamond(orb));
}
BENCHMARK(BM_ChenRuan)->Unit(benchmark::kMillisecond);

void BM_QuinticMirrorCheck(benchmark::State& state) {
  const auto orb = build_orbifold(fermat_potential(5, 5), {});
  for (auto _ : state) benchmark::DoNotOptimize(mirror_check(orb));
}
BENCHMARK(BM_QuinticMirrorCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
