#include <benchmark/benchmark.h>

#include "milnor/ehrhart.hpp"
#include "milnor/hodge.hpp"
#include "milnor/monodromy.hpp"
#include "milnor/oracles.hpp"

using namespace milnor;

namespace {

const char* const kInputs[] = {
    "x^5 + x^2*y^2 + y^5",
    "x^4 + y^4 + z^4 + x^2*y^2*z^2",
    "x^7 + y^7 + z^7 + x^2*y^2*z^2",
    "x^3 + y^3 + z^3 + w^3 + x*y*z*w",
};

void BM_NewtonPolyhedron(benchmark::State& state) {
  const SupportSet s = parse_polynomial(kInputs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(newton_polyhedron(s));
}
BENCHMARK(BM_NewtonPolyhedron)->DenseRange(0, 3);

// Tables are memoized, so only the first iteration does the lattice work;
// the steady state measures the assembly of the motivic sums.
void BM_JordanBlocks(benchmark::State& state) {
  const NewtonPolyhedron np = newton_polyhedron(parse_polynomial(kInputs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(jordan_blocks(np));
}
BENCHMARK(BM_JordanBlocks)->DenseRange(0, 3);

void BM_HodgeTableFresh(benchmark::State& state) {
  // Each iteration uses a character not seen before, so the cache never hits.
  const LatticePolytope p({{0, 0, 0}, {12, 0, 0}, {0, 12, 0}, {0, 0, 12}}, 3);
  const Int denominators[] = {2, 3, 4, 6, 12};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hodge_table(p, Character({1, 1, 1}, denominators[i++])));
}
BENCHMARK(BM_HodgeTableFresh)->Iterations(5);

void BM_Kouchnirenko(benchmark::State& state) {
  const SupportSet s = parse_polynomial(kInputs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(kouchnirenko_mu(s));
}
BENCHMARK(BM_Kouchnirenko)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
