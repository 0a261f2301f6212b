#include <benchmark/benchmark.h>

#include <fstream>
#include <string>
#include <vector>

#include "girthlab/girthlab.hpp"

using namespace girthlab;

namespace {

std::vector<MultiGraph> load(const std::string& name) {
    std::ifstream in(std::string(GIRTHLAB_BENCH_DATA) + "/" + name);
    std::vector<MultiGraph> out;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) out.push_back(parse_graph6(line));
    }
    return out;
}

void BM_EpsilonTwelveCage(benchmark::State& state) {
    const MultiGraph g = tutte_12_cage();
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(epsilon_all(g, threads));
}
BENCHMARK(BM_EpsilonTwelveCage)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EpsilonHoffmanSingleton(benchmark::State& state) {
    const MultiGraph g = hoffman_singleton();
    for (auto _ : state) benchmark::DoNotOptimize(epsilon_all(g));
}
BENCHMARK(BM_EpsilonHoffmanSingleton)->Unit(benchmark::kMillisecond);

void BM_GirthLargePrism(benchmark::State& state) {
    const MultiGraph g = prism(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(girth_report(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GirthLargePrism)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond)->Complexity();

void BM_CorpusCensus(benchmark::State& state) {
    const auto corpus = load("cubic_connected_n04-n14.g6");
    for (auto _ : state) {
        Census census;
        for (std::size_t i = 0; i < corpus.size(); ++i) census.add(census_item(std::to_string(i), corpus[i]));
        benchmark::DoNotOptimize(census.clean());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.size()));
}
BENCHMARK(BM_CorpusCensus)->Unit(benchmark::kMillisecond);

void BM_Isomorphism(benchmark::State& state) {
    const MultiGraph g = tutte_12_cage();
    std::vector<VertexId> perm(g.vertex_count());
    for (VertexId v = 0; v < perm.size(); ++v) perm[v] = static_cast<VertexId>((v * 37 + 11) % perm.size());
    const MultiGraph h = relabel(g, perm);
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(g, h));
}
BENCHMARK(BM_Isomorphism)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
