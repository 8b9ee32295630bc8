/*
   Copyright 2026 The prmcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "prm/codes.hpp"
#include "prm/dimension.hpp"
#include "prm/gf.hpp"
#include "prm/minwt.hpp"
#include "prm/oracle.hpp"
#include "prm/poly.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
    const auto f = prm::gf::Field::of_order(static_cast<unsigned>(state.range(0)));
    prm::gf::Elem acc = 1;
    const prm::gf::Elem g = f.q() > 2 ? 2 : 1;
    for (auto _ : state) {
        acc = f.mul(acc, g);
        acc = f.add(acc, 1);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(9)->Arg(256)->Arg(65536);

void BM_DimensionFormulas(benchmark::State& state) {
    const unsigned q = static_cast<unsigned>(state.range(0));
    const long long m = 4;
    for (auto _ : state) {
        for (long long d = 1; d <= m * (q - 1) + 1; ++d) {
            benchmark::DoNotOptimize(prm::dim::dim_alpha(q, d, m));
            benchmark::DoNotOptimize(prm::dim::dim_beta(q, d, m));
            benchmark::DoNotOptimize(prm::dim::dim_gamma(q, d, m));
            benchmark::DoNotOptimize(prm::dim::dim_delta(q, d, m));
        }
    }
}
BENCHMARK(BM_DimensionFormulas)->Arg(3)->Arg(9);

void BM_GeneratorMatrix(benchmark::State& state) {
    const auto f = prm::gf::Field::of_order(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(prm::codes::prm_generator_matrix(f, 3, 3));
}
BENCHMARK(BM_GeneratorMatrix)->Arg(3)->Arg(4);

// Gray-code walk over all codewords of PRM_q(d, 2).
void BM_WeightDistribution(benchmark::State& state) {
    const auto f = prm::gf::Field::of_order(static_cast<unsigned>(state.range(0)));
    const auto g = prm::codes::prm_generator_matrix(f, static_cast<unsigned>(state.range(1)), 2);
    const auto threads = static_cast<unsigned>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(prm::oracle::weight_distribution(g, prm::oracle::default_guard, threads));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(prm::comb::ipow(f.q(), static_cast<unsigned>(g.dimension()))));
}
BENCHMARK(BM_WeightDistribution)->Args({3, 3, 1})->Args({3, 3, 0})->Args({4, 3, 0})->Unit(benchmark::kMillisecond);

void BM_ReduceProjective(benchmark::State& state) {
    const auto f = prm::gf::Field::of_order(5);
    const auto F = prm::poly::parse("X0^9*X1^7*X2 + 3*X0^4*X1^13 + X1^5*X2^12", f, 3);
    for (auto _ : state) benchmark::DoNotOptimize(prm::poly::reduce_projective(F));
}
BENCHMARK(BM_ReduceProjective);

}  // namespace

BENCHMARK_MAIN();
