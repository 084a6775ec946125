// Serial reference vs OpenMP kernels.  Thread count for the parallel variants
// comes from CM_DIHEDRAL_THREADS.

#include "cmdihedral/congruence.hpp"
#include "cmdihedral/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace cmdihedral;

namespace {

HeckeChar const & delta_char()
{
    static HeckeChar const chi = [] {
        QuadraticField K(-23);
        return HeckeChar({-23, 12, K.splitting_type(23).primes.at(0), {11}, {}, {23}});
    }();
    return chi;
}

std::vector<Integer> product_series(std::size_t n)
{
    std::vector<Integer> p(n + 1, 0);
    p[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = n; i >= k; --i)
            p[i] -= p[i - k];
    return p;
}

EllipticCurve const curve{0, -1, 1, -18507, -989382};

std::vector<std::int64_t> good_primes(std::int64_t bound)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p : primes_up_to(bound))
        if (p != 13 && p != 71)
            out.push_back(p);
    return out;
}

void BM_series_mul_serial(benchmark::State & st)
{
    auto const n = static_cast<std::size_t>(st.range(0));
    auto const p = product_series(n);
    for (auto _ : st)
        benchmark::DoNotOptimize(series_mul_serial(p, p, n));
}

void BM_series_mul_parallel(benchmark::State & st)
{
    auto const n = static_cast<std::size_t>(st.range(0));
    auto const p = product_series(n);
    int const threads = configured_threads();
    for (auto _ : st)
        benchmark::DoNotOptimize(series_mul(p, p, n, threads));
}

void BM_theta_serial(benchmark::State & st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(theta_coefficients_serial(delta_char(), static_cast<std::size_t>(st.range(0))));
}

void BM_theta_parallel(benchmark::State & st)
{
    int const threads = configured_threads();
    for (auto _ : st)
        benchmark::DoNotOptimize(theta_coefficients(delta_char(), static_cast<std::size_t>(st.range(0)), threads));
}

void BM_reduce_serial(benchmark::State & st)
{
    auto const c = theta_coefficients_serial(delta_char(), static_cast<std::size_t>(st.range(0)));
    auto const m = build_reductions(delta_char().ring(), 23).at(0);
    for (auto _ : st)
        benchmark::DoNotOptimize(reduce_coefficients_serial(c, m));
}

void BM_reduce_parallel(benchmark::State & st)
{
    auto const c = theta_coefficients_serial(delta_char(), static_cast<std::size_t>(st.range(0)));
    auto const m = build_reductions(delta_char().ring(), 23).at(0);
    int const threads = configured_threads();
    for (auto _ : st)
        benchmark::DoNotOptimize(reduce_coefficients(c, m, threads));
}

void BM_frobenius_serial(benchmark::State & st)
{
    auto const primes = good_primes(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(frobenius_traces_serial(curve, primes));
}

void BM_frobenius_parallel(benchmark::State & st)
{
    auto const primes = good_primes(st.range(0));
    int const threads = configured_threads();
    for (auto _ : st)
        benchmark::DoNotOptimize(frobenius_traces(curve, primes, threads));
}

}  // namespace

BENCHMARK(BM_series_mul_serial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_mul_parallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theta_serial)->Arg(552)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theta_parallel)->Arg(552)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_serial)->Arg(2000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_reduce_parallel)->Arg(2000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_frobenius_serial)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_frobenius_parallel)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
