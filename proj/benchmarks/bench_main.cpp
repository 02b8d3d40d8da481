#include <benchmark/benchmark.h>

#include "treechild/classify.hpp"
#include "treechild/generate.hpp"
#include "treechild/io.hpp"
#include "treechild/isomorphism.hpp"
#include "treechild/sequence.hpp"

using namespace treechild;

namespace {

// Arguments: leaves, reticulations.
void BM_ClassifyRooted(benchmark::State& state) {
  RootedNetwork n = generate_tree_child(state.range(0), state.range(1), 1).network;
  for (auto _ : state) benchmark::DoNotOptimize(classify_rooted(n));
}
BENCHMARK(BM_ClassifyRooted)->Args({8, 4})->Args({32, 16})->Args({128, 64});

void BM_CheckTreeChild(benchmark::State& state) {
  CherryPickingSequence s = generate_tree_child(state.range(0), state.range(1), 2).sequence;
  for (auto _ : state) benchmark::DoNotOptimize(check_tree_child(s));
}
BENCHMARK(BM_CheckTreeChild)->Args({32, 16})->Args({512, 256});

void BM_BuildRooted(benchmark::State& state) {
  CherryPickingSequence s = generate_tree_child(state.range(0), state.range(1), 3).sequence;
  for (auto _ : state) benchmark::DoNotOptimize(build_rooted(s));
}
BENCHMARK(BM_BuildRooted)->Args({32, 16})->Args({512, 256});

void BM_Orientation(benchmark::State& state) {
  UnrootedNetwork u = unroot(generate_unrootable_tree_child(state.range(0), state.range(1), 4).network);
  for (auto _ : state) benchmark::DoNotOptimize(find_tree_child_orientation(u));
}
BENCHMARK(BM_Orientation)->Args({8, 4})->Args({12, 6})->Args({16, 8});

void BM_BruteForceOrientation(benchmark::State& state) {
  UnrootedNetwork u = unroot(generate_unrootable_tree_child(state.range(0), state.range(1), 4).network);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_tree_child_orientation(u));
}
BENCHMARK(BM_BruteForceOrientation)->Args({5, 2})->Args({6, 3});

void BM_CanonicalKey(benchmark::State& state) {
  RootedNetwork n = generate_tree_child(state.range(0), state.range(1), 5).network;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(n));
}
BENCHMARK(BM_CanonicalKey)->Args({16, 8})->Args({64, 32});

void BM_SerializeParse(benchmark::State& state) {
  RootedNetwork n = generate_tree_child(state.range(0), state.range(1), 6).network;
  for (auto _ : state) benchmark::DoNotOptimize(parse_rooted(serialize_rooted(n)));
}
BENCHMARK(BM_SerializeParse)->Args({16, 8})->Args({64, 32});

}  // namespace

BENCHMARK_MAIN();
