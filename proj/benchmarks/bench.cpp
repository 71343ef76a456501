#include "aperiodic/ammann.hpp"
#include "aperiodic/dynamics.hpp"
#include "aperiodic/spectra.hpp"
#include "aperiodic/stars.hpp"

#include <benchmark/benchmark.h>

using namespace aperiodic;

static void BM_Deflate(benchmark::State& state) {
    auto seed = seed_patch(SeedKind::Sun);
    for (auto _ : state) benchmark::DoNotOptimize(deflate(seed, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Deflate)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Compose(benchmark::State& state) {
    auto p = deflate(seed_patch(SeedKind::Sun), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compose(compose(p)));
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Recompose(benchmark::State& state) {
    auto p = deflate(seed_patch(SeedKind::Sun), static_cast<int>(state.range(0)));
    auto q = QPoint::polar(0.3, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(recompose(p, q));
}
BENCHMARK(BM_Recompose)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Iterate(benchmark::State& state) {
    auto t = recompose(deflate(seed_patch(SeedKind::Sun), static_cast<int>(state.range(0))), QPoint::polar(0.3, 0.2));
    for (auto _ : state) benchmark::DoNotOptimize(iterate(t));
}
BENCHMARK(BM_Iterate)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_StarAudit(benchmark::State& state) {
    auto t = recompose(deflate(seed_patch(SeedKind::Sun), 10), QPoint::polar(0.3, 0.2));
    for (auto _ : state) benchmark::DoNotOptimize(star_atlas_audit(t));
}
BENCHMARK(BM_StarAudit)->Unit(benchmark::kMillisecond);

static void BM_EnumerateStars(benchmark::State& state) {
    auto q = QPoint::polar(0.3, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_local_stars(q, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateStars)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Diffraction(benchmark::State& state) {
    auto pts = nearest_points(vertex_set(deflate(seed_patch(SeedKind::Sun), 10)), 500);
    int res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(diffraction(pts, {-10, 10, res}));
    state.SetItemsProcessed(state.iterations() * res * res * static_cast<int64_t>(pts.size()));
}
BENCHMARK(BM_Diffraction)->Arg(64)->Arg(128)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_QMap(benchmark::State& state) {
    double r = 0.3, t = 0.2;
    for (auto _ : state) {
        auto [a, b] = q_map(r, t);
        benchmark::DoNotOptimize(a);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_QMap);
BENCHMARK_MAIN();
