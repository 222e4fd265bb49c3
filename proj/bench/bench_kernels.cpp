// Weighting sums: OpenMP kernel against the serial reference.
#include <benchmark/benchmark.h>

#include "cdr/pixton.hpp"

using namespace cdr;

namespace {

struct Instance {
    SubdividedGraph s;
    Divisor d;
    std::vector<long> legs;
};

Instance theta_instance(int delta) {
    Instance in{subdivide(shapes::theta(2), delta), {}, {delta, -delta}};
    in.d.assign(in.s.nv(), 0);
    in.d[in.s.point(0, 1)] = 1;
    in.d[0] = -1;
    return in;
}

void run(benchmark::State &state, Kernel kernel) {
    const Instance in = theta_instance(static_cast<int>(state.range(0)));
    const long r = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(weighting_sum(in.s, in.d, in.legs, r, 2, kernel));
    state.counters["weightings"] = static_cast<double>(r * r);
}

void BM_parallel(benchmark::State &state) { run(state, Kernel::parallel); }
void BM_serial_reference(benchmark::State &state) { run(state, Kernel::serial_reference); }

}  // namespace

BENCHMARK(BM_parallel)->Args({2, 24})->Args({3, 48})->Args({3, 96})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_reference)->Args({2, 24})->Args({3, 48})->Args({3, 96})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
