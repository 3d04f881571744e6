#include <benchmark/benchmark.h>

#include "eqmodel/algebraic_model.hpp"

using namespace eqmodel;

namespace {

GroupPtr group_arg(benchmark::State const &state)
{
  static std::vector<std::string> const names{"symmetric-3", "dihedral-8", "alternating-4", "symmetric-4"};
  return make_group(named_group(names.at(static_cast<std::size_t>(state.range(0)))));
}

void BM_BuildModel(benchmark::State &state)
{
  GroupPtr G = group_arg(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_model(G, 2));
}

void BM_BuildModelSerial(benchmark::State &state)
{
  GroupPtr G = group_arg(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_model_serial(G, 2));
}

void BM_AverageProjector(benchmark::State &state)
{
  GroupPtr G = group_arg(state);
  auto rep = tensor(GRepresentation::regular(G), GRepresentation::regular(G));
  for (auto _ : state)
    benchmark::DoNotOptimize(average_projector(rep));
}

void BM_AverageProjectorSerial(benchmark::State &state)
{
  GroupPtr G = group_arg(state);
  auto rep = tensor(GRepresentation::regular(G), GRepresentation::regular(G));
  for (auto _ : state)
    benchmark::DoNotOptimize(average_projector_serial(rep));
}

}  // namespace

BENCHMARK(BM_BuildModel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildModelSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AverageProjector)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AverageProjectorSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
