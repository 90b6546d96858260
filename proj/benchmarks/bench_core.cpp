// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "digitsum/diophantine.hpp"
#include "digitsum/sequences.hpp"
#include "digitsum/series.hpp"

namespace {

namespace seq = digitsum::sequences;
namespace ser = digitsum::series;
namespace dio = digitsum::diophantine;

void BM_S2Sweep(benchmark::State& state) {
    const unsigned long n = state.range(0);
    for (auto _ : state) {
        unsigned long acc = 0;
        for (unsigned long i = 0; i < n; ++i) {
            acc += seq::s2(i);
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_S2Sweep)->Arg(1 << 16)->Arg(1 << 20);

void BM_FMultiplicativeSweep(benchmark::State& state) {
    const unsigned long n = state.range(0);
    for (auto _ : state) {
        long acc = 0;
        for (unsigned long i = 1; i <= n; ++i) {
            acc += seq::f_multiplicative(i);
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_FMultiplicativeSweep)->Arg(1 << 16)->Arg(1 << 20);

void BM_SeriesOracle(benchmark::State& state) {
    const std::size_t cap = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(seq::f_series_coefficients(cap));
    }
}
BENCHMARK(BM_SeriesOracle)->Arg(4096)->Arg(1 << 20);

void BM_EvalF(benchmark::State& state) {
    const unsigned terms = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ser::eval_F(ser::Base(2), terms));
    }
}
BENCHMARK(BM_EvalF)->Arg(8)->Arg(12)->Arg(16);

void BM_EvalS(benchmark::State& state) {
    const unsigned terms = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ser::eval_S(ser::Base(2), terms));
    }
}
BENCHMARK(BM_EvalS)->Arg(256)->Arg(4096)->Arg(1 << 16);

void BM_CertifiedPrefixF2(benchmark::State& state) {
    const unsigned terms = state.range(0);
    const ser::Enclosure e = ser::eval_F(ser::Base(2), terms);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dio::certified_cf_prefix(e));
    }
}
BENCHMARK(BM_CertifiedPrefixF2)->Arg(8)->Arg(10)->Arg(12);

void BM_VerifyRelation(benchmark::State& state) {
    const unsigned precision = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ser::verify_relation(ser::Base(2), precision));
    }
}
BENCHMARK(BM_VerifyRelation)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
