#include <benchmark/benchmark.h>

#include <random>

#include "tinv/hierarchy.hpp"
#include "tinv/invariant.hpp"
#include "tinv/largeness.hpp"
#include "tinv/ramsey.hpp"
#include "tinv/relation.hpp"

using namespace tinv;

namespace {

FiniteRelation random_relation(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<State> dom(n);
    for (std::size_t i = 0; i < n; ++i) dom[i] = i;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < m; ++i) e.emplace_back(rng() % n, rng() % n);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return FiniteRelation(dom, e);
}

}  // namespace

static void BM_TransitiveClosure(benchmark::State& st) {
    auto r = random_relation(st.range(0), st.range(0) * 3, 7);
    for (auto _ : st) benchmark::DoNotOptimize(transitive_closure(r));
}
BENCHMARK(BM_TransitiveClosure)->Arg(64)->Arg(256)->Arg(1024);

static void BM_WellFounded(benchmark::State& st) {
    auto r = random_relation(st.range(0), st.range(0) * 2, 8);
    for (auto _ : st) benchmark::DoNotOptimize(is_well_founded(r));
}
BENCHMARK(BM_WellFounded)->Arg(1000)->Arg(10000);

static void BM_LargestHomogeneous(benchmark::State& st) {
    std::mt19937_64 rng(9);
    const std::size_t n = st.range(0);
    std::vector<State> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    std::vector<std::uint8_t> pairs(n * (n - 1) / 2);
    for (auto& p : pairs) p = rng() & 1;
    Coloring c(v, 2, pairs);
    for (auto _ : st) benchmark::DoNotOptimize(largest_homogeneous_set(c));
}
BENCHMARK(BM_LargestHomogeneous)->Arg(8)->Arg(14)->Arg(20);

static void BM_AllColoringsOfSix(benchmark::State& st) {
    for (auto _ : st) {
        std::size_t hits = 0;
        for_each_two_coloring(6, [&](const Coloring& c) { hits += largest_homogeneous_set(c).members.size() >= 3; });
        benchmark::DoNotOptimize(hits);
    }
}
BENCHMARK(BM_AllColoringsOfSix)->Unit(benchmark::kMillisecond);

static void BM_Fgh(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(fgh(2, Integer(st.range(0))));
}
BENCHMARK(BM_Fgh)->Arg(10)->Arg(1000);

static void BM_LargenessModes(benchmark::State& st) {
    StateSet x;
    for (State v = 1; v <= 14; ++v) x.push_back(v);
    const auto mode = st.range(0) ? LargenessMode::Intervals : LargenessMode::Exhaustive;
    for (auto _ : st) benchmark::DoNotOptimize(is_k_large(x, 3, mode));
}
BENCHMARK(BM_LargenessModes)->Arg(0)->Arg(1);

static void BM_FindInvariant(benchmark::State& st) {
    auto r = random_relation(10, 14, 11);
    // drop the back edges so an invariant exists
    std::vector<Edge> e;
    for (const Edge& x : r.edges())
        if (x.first < x.second) e.push_back(x);
    TransitionSystem ts(FiniteRelation(std::vector<State>(r.domain().begin(), r.domain().end()), e),
                        StateSet(r.domain().begin(), r.domain().end()));
    for (auto _ : st) benchmark::DoNotOptimize(find_invariant(ts, st.range(0)));
}
BENCHMARK(BM_FindInvariant)->Arg(1)->Arg(2);

static void BM_DepthChecker(benchmark::State& st) {
    std::vector<Edge> e;
    for (State x = 4; x < 10; ++x) e.emplace_back(x, x + 1);
    FiniteRelation r({4, 5, 6, 7, 8, 9, 10}, e);
    for (auto _ : st) benchmark::DoNotOptimize(depth_linearly_bounded(r, st.range(0), false));
}
BENCHMARK(BM_DepthChecker)->Arg(1)->Arg(2);

// the packaged benchmark_main archive is built with a different LTO version
BENCHMARK_MAIN();
