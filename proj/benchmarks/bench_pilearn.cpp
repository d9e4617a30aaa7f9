#include <pilearn/chordal.hpp>
#include <pilearn/entropy.hpp>
#include <pilearn/generators.hpp>
#include <pilearn/search.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace pilearn;

namespace {

/// Chordal graph made of overlapping triangles along a path: 0-1-2, 1-2-3, ...
Graph triangle_strip(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_link({v, v + 1});
    for (std::size_t v = 0; v + 2 < n; ++v) g.add_link({v, v + 2});
    return g;
}

JointTable random_binary_joint(std::size_t n, std::uint64_t seed) {
    std::vector<std::pair<std::string, std::size_t>> vars;
    for (std::size_t v = 0; v < n; ++v) vars.emplace_back("x" + std::to_string(v), 2);
    Domain dom(std::move(vars));
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> draw(1.0);
    std::vector<double> p(dom.state_count());
    double total = 0.0;
    for (auto& q : p) total += (q = draw(rng));
    for (auto& q : p) q /= total;
    return JointTable(std::move(dom), std::move(p));
}

void BM_IsChordal(benchmark::State& state) {
    const auto g = triangle_strip(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_chordal(g));
}
BENCHMARK(BM_IsChordal)->RangeMultiplier(4)->Range(8, 512);

void BM_DmnEntropyExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ProbabilitySource src(random_binary_joint(n, 1));
    const auto g = triangle_strip(n);
    for (auto _ : state) benchmark::DoNotOptimize(dmn_entropy(g, src));
}
BENCHMARK(BM_DmnEntropyExact)->DenseRange(6, 14, 4);

void BM_DmnEntropySampled(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ProbabilitySource src(sample_joint(random_binary_joint(n, 2), 10000, 3));
    const auto g = triangle_strip(n);
    for (auto _ : state) benchmark::DoNotOptimize(dmn_entropy(g, src));
}
BENCHMARK(BM_DmnEntropySampled)->DenseRange(6, 14, 4);

void BM_LookaheadPass(benchmark::State& state) {
    const auto i = static_cast<std::size_t>(state.range(0));
    const ProbabilitySource src(random_binary_joint(8, 4));
    SearchConfig cfg{src};
    cfg.max_links = i;
    cfg.delta_h = 1e9;  // no adoption: one full scan per iteration
    for (auto _ : state) {
        Graph g(8);
        benchmark::DoNotOptimize(lookahead(g, i, cfg));
    }
}
BENCHMARK(BM_LookaheadPass)->DenseRange(1, 3);

void BM_MusicBoxLearn(benchmark::State& state) {
    const ProbabilitySource src(music_box_model());
    SearchConfig cfg{src};
    cfg.max_links = 3;
    cfg.delta_h = 0.004;
    for (auto _ : state) benchmark::DoNotOptimize(ml_learn(cfg).graph.link_count());
}
BENCHMARK(BM_MusicBoxLearn)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state) {
    const auto joint = music_box_model();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_joint(joint, n, 7).size());
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Sample)->Range(1000, 100000);

}  // namespace

BENCHMARK_MAIN();
