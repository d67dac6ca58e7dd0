#include "uavplan/astar.hpp"
#include "uavplan/rng.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

uavplan::OccupancyGrid cluttered_grid(int side, double blocked_fraction, std::uint64_t seed) {
    uavplan::SplitMix64 rng(seed);
    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(side) * side, 0);
    for (auto& b : blocked) b = rng.next_double() < blocked_fraction ? 1 : 0;
    // keep the corners open so corner-to-corner searches are well-posed
    blocked.front() = 0;
    blocked.back() = 0;
    return uavplan::OccupancyGrid(uavplan::GridSpec{1, side, side}, std::move(blocked));
}

void BM_astar_empty(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const uavplan::OccupancyGrid grid = uavplan::build_grid(uavplan::GridSpec{1, side, side}, {});
    for (auto _ : state) {
        auto res = uavplan::astar(grid, {0, 0}, {side - 1, side - 1});
        benchmark::DoNotOptimize(res);
    }
    state.SetComplexityN(side * side);
}
BENCHMARK(BM_astar_empty)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

void BM_astar_cluttered(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const uavplan::OccupancyGrid grid = cluttered_grid(side, 0.2, 99);
    for (auto _ : state) {
        auto res = uavplan::astar(grid, {0, 0}, {side - 1, side - 1});
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_astar_cluttered)->Arg(64)->Arg(128)->Arg(256);

} // namespace

BENCHMARK_MAIN();
