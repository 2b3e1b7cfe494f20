// Serial reference kernels against their OpenMP versions.

#include "cantorlab/cantor_measure.hpp"
#include "cantorlab/layer.hpp"
#include "cantorlab/missing_digit_set.hpp"

#include <benchmark/benchmark.h>

using namespace cantorlab;

namespace {

const MissingDigitSet K = MissingDigitSet::middle_third();

template <bool Parallel>
void centers(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = Parallel ? enumerate_centers(K, n, true) : enumerate_centers_serial(K, n, true);
        benchmark::DoNotOptimize(v);
    }
}

IntervalUnion many_intervals(int count) {
    std::vector<RatInterval> ivs;
    const Integer den = ipow(Integer(3), 12);
    for (int k = 0; k < count; ++k) {
        const Integer a = (Integer(k) * 7919) % den;
        ivs.emplace_back(Rational(a, den), Rational(a + 40, den));
    }
    return merge_intervals(ivs);
}

template <bool Parallel>
void union_mu(benchmark::State& state) {
    const auto u = many_intervals(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto v = Parallel ? union_measure(K, u) : union_measure_serial(K, u);
        benchmark::DoNotOptimize(v);
    }
}

template <bool Parallel>
void scan(benchmark::State& state) {
    const auto cfg = WindowConfig::for_window(K, RatInterval::unit());
    const auto psi = ApproxFunction::power(Scalar(Rational(2)));
    const int nmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? quasi_independence_scan(K, psi, cfg, nmax)
                          : quasi_independence_scan_serial(K, psi, cfg, nmax);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void box(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto e = Parallel ? box_dimension_estimate(K, Rational(2), n, true)
                          : box_dimension_estimate_serial(K, Rational(2), n, true);
        benchmark::DoNotOptimize(e);
    }
}

} // namespace

BENCHMARK(centers<false>)->Name("enumerate_centers/serial")->Arg(10)->Arg(14);
BENCHMARK(centers<true>)->Name("enumerate_centers/openmp")->Arg(10)->Arg(14);
BENCHMARK(union_mu<false>)->Name("union_measure/serial")->Arg(256)->Arg(2048);
BENCHMARK(union_mu<true>)->Name("union_measure/openmp")->Arg(256)->Arg(2048);
BENCHMARK(scan<false>)->Name("quasi_scan/serial")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<true>)->Name("quasi_scan/openmp")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(box<false>)->Name("box_estimate/serial")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(box<true>)->Name("box_estimate/openmp")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
