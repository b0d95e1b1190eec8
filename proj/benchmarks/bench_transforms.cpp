#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "fx/fft.hpp"
#include "fx/ofdm.hpp"
#include "fx/prng.hpp"

namespace {

std::vector<std::complex<double>> random_input(std::size_t n, double amplitude) {
    fx::SplitMix64 rng{99};
    std::vector<std::complex<double>> v(n);
    for (auto& x : v)
        x = {amplitude * (2.0 * rng.next_double() - 1.0),
             amplitude * (2.0 * rng.next_double() - 1.0)};
    return v;
}

std::vector<fx::FixedComplex> fixed_input(std::size_t n, fx::FixedSpec spec, double amplitude) {
    const auto f = random_input(n, amplitude);
    std::vector<fx::FixedComplex> out;
    out.reserve(n);
    for (const auto& x : f)
        out.push_back(fx::quantize(spec, x));
    return out;
}

void IfftFloat(benchmark::State& state) {
    const auto x = random_input(static_cast<std::size_t>(state.range(0)), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(fx::ifft_radix4(x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(IfftFloat)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void IfftFixedWidth(benchmark::State& state) {
    const auto x =
        fixed_input(static_cast<std::size_t>(state.range(0)), fx::make_spec(1, 14), 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(fx::ifft_radix4(x, fx::ScalingPolicy::fixed_width));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(IfftFixedWidth)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void IfftGrow(benchmark::State& state) {
    const auto x =
        fixed_input(static_cast<std::size_t>(state.range(0)), fx::make_spec(2, 14), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(fx::ifft_radix4(x, fx::ScalingPolicy::grow));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(IfftGrow)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void IfftTruncateLsb(benchmark::State& state) {
    const auto x =
        fixed_input(static_cast<std::size_t>(state.range(0)), fx::make_spec(2, 20), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(fx::ifft_radix4(x, fx::ScalingPolicy::truncate_lsb));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(IfftTruncateLsb)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void OfdmRunPoint(benchmark::State& state) {
    fx::OfdmConfig cfg;
    cfg.bits_n = static_cast<int>(state.range(0));
    cfg.backoff_db = 12.0;
    cfg.n_symbols = 16;
    cfg.seed = 5;
    for (auto _ : state)
        benchmark::DoNotOptimize(fx::run_point(cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.n_symbols));
}
BENCHMARK(OfdmRunPoint)->Arg(9)->Arg(13);

} // namespace

BENCHMARK_MAIN();
