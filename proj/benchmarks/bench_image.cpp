/*
 * Copyright (C) 2026 The logaffine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lip/enhance.hpp"
#include "lip/image.hpp"
#include "lip/pnm.hpp"
#include "lip/stats.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

lip::RawImage random_raw(std::size_t side, lip::Sample max_value) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<lip::Sample> dist(0, max_value);
    std::vector<lip::Sample> px(side * side);
    for (auto& p : px) {
        p = dist(rng);
    }
    return lip::RawImage(side, side, max_value, std::move(px));
}

void BM_Decode(benchmark::State& state) {
    const auto raw = random_raw(static_cast<std::size_t>(state.range(0)), 255);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lip::decode_image(raw));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(raw.size()));
}
BENCHMARK(BM_Decode)->Arg(256)->Arg(1024);

void BM_Stats(benchmark::State& state) {
    const auto img = lip::decode_image(random_raw(static_cast<std::size_t>(state.range(0)), 255));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lip::compute_stats(img));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.size()));
}
BENCHMARK(BM_Stats)->Arg(256)->Arg(1024);

void BM_FoldMean(benchmark::State& state) {
    const auto img = lip::decode_image(random_raw(static_cast<std::size_t>(state.range(0)), 255));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lip::log_mean_fold_oracle(img));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.size()));
}
BENCHMARK(BM_FoldMean)->Arg(256);

void BM_EnhancePipeline(benchmark::State& state) {
    const auto raw = random_raw(static_cast<std::size_t>(state.range(0)), 255);
    for (auto _ : state) {
        const auto e = lip::enhance(lip::decode_image(raw));
        benchmark::DoNotOptimize(lip::encode_image(e.image, 255));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(raw.size()));
}
BENCHMARK(BM_EnhancePipeline)->Arg(256)->Arg(1024);

void BM_PgmRoundTrip(benchmark::State& state) {
    const auto raw = random_raw(512, 255);
    const auto format = state.range(0) == 5 ? lip::PnmFormat::P5 : lip::PnmFormat::P2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lip::read_pgm(lip::write_pgm(raw, format)));
    }
}
BENCHMARK(BM_PgmRoundTrip)->Arg(2)->Arg(5);

} // namespace
