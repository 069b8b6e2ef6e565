#include <benchmark/benchmark.h>

#include "gqcc/correspondence.hpp"
#include "gqcc/generators.hpp"
#include "gqcc/linalg.hpp"
#include "gqcc/operators.hpp"
#include "gqcc/path_space.hpp"
#include "gqcc/spectrum.hpp"
#include "gqcc/tree.hpp"

namespace {

using namespace gqcc;

// Random admissible graphs indexed by vertex count; cyclomatic number ~ n/2.
Graph sized_graph(std::int64_t n) {
  return random_admissible_graph(static_cast<std::size_t>(n), static_cast<std::size_t>(n / 2), 42);
}

void BM_EdgeSpectrum(benchmark::State& state) {
  const Graph g = sized_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_spectrum(g));
  state.counters["edges"] = static_cast<double>(g.directed_edge_count());
}
BENCHMARK(BM_EdgeSpectrum)->Arg(8)->Arg(12)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_NullspaceBareiss(benchmark::State& state) {
  const Graph g = sized_graph(state.range(0));
  const ExactMatrix m = shifted(edge_laplacian_matrix(g), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_bareiss(m));
}
BENCHMARK(BM_NullspaceBareiss)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_NullspaceGaussJordan(benchmark::State& state) {
  const Graph g = sized_graph(state.range(0));
  const ExactMatrix m = shifted(edge_laplacian_matrix(g), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_gauss_jordan(m, Rational(0)));
}
BENCHMARK(BM_NullspaceGaussJordan)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_NullspaceNumeric(benchmark::State& state) {
  const Graph g = sized_graph(state.range(0));
  const NumericMatrix m = NumericMatrix::from_exact(shifted(edge_laplacian_matrix(g), Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_numeric(m));
}
BENCHMARK(BM_NullspaceNumeric)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_TransferMatrix(benchmark::State& state) {
  const Graph g = petersen_graph();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transfer_matrix(g, depth));
  state.counters["dimension"] = static_cast<double>(count_paths(g, depth));
}
BENCHMARK(BM_TransferMatrix)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CheckGeneric(benchmark::State& state) {
  const Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(check_generic(g, Rational(2)));
}
BENCHMARK(BM_CheckGeneric)->Unit(benchmark::kMillisecond);

void BM_DimensionFormulas(benchmark::State& state) {
  const Graph g = sized_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_dimension_formulas(g));
}
BENCHMARK(BM_DimensionFormulas)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ZetaDeterminant(benchmark::State& state) {
  const Graph g = sized_graph(state.range(0));
  const Rational u(2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_determinant(g, u));
}
BENCHMARK(BM_ZetaDeterminant)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_FactorizationCheck(benchmark::State& state) {
  const Graph g = complete_graph(5);
  const TreeBall ball = TreeBall::build(g, 0, static_cast<std::size_t>(state.range(0)));
  const auto mu = random_rational_measure(ball, 1);
  for (auto _ : state) benchmark::DoNotOptimize(factorization_check(ball, Rational(1, 2), mu));
  state.counters["nodes"] = static_cast<double>(ball.node_count());
}
BENCHMARK(BM_FactorizationCheck)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
