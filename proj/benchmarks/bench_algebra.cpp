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

#include "lip/algebra.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

namespace {

std::vector<lip::GrayLevel> random_levels(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-0.999, 0.999);
    std::vector<lip::GrayLevel> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(lip::GrayLevel::from_value(dist(rng)));
    }
    return out;
}

void BM_FromValue(benchmark::State& state) {
    double v = -0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lip::GrayLevel::from_value(v));
        v = v > 0.9 ? -0.9 : v + 1e-3;
    }
}
BENCHMARK(BM_FromValue);

void BM_Value(benchmark::State& state) {
    const auto levels = random_levels(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(levels[i++ & 1023].value());
    }
}
BENCHMARK(BM_Value);

void BM_Add(benchmark::State& state) {
    const auto levels = random_levels(1024);
    lip::GrayLevel acc;
    std::size_t i = 0;
    for (auto _ : state) {
        acc = lip::lip_smul(0.5, lip::lip_add(acc, levels[i++ & 1023]));
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_Add);

// Closed-form scalar multiplication, for comparison with the log-space path.
void BM_SmulDirect(benchmark::State& state) {
    double v = 0.71;
    for (auto _ : state) {
        benchmark::DoNotOptimize(v);
        const double p = std::pow(1.0 + v, 2.37);
        const double q = std::pow(1.0 - v, 2.37);
        benchmark::DoNotOptimize((p - q) / (p + q));
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_SmulDirect);

void BM_SmulLogSpace(benchmark::State& state) {
    const auto v = lip::GrayLevel::from_value(0.71);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lip::lip_smul(2.37, v).value());
    }
}
BENCHMARK(BM_SmulLogSpace);

} // namespace
