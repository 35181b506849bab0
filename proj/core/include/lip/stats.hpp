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

#pragma once

#include "lip/algebra.hpp"
#include "lip/image.hpp"

#include <cstddef>

namespace lip {

/// Log-domain statistics of an image: mean mu_f (a gray level), variance
/// sigma_f^2 (squared log coordinate) and the pixel count.
struct ImageStats {
    GrayLevel mean;
    double variance = 0.0;
    std::size_t count = 0;
};

/// Statistics the enhancement drives an image towards.
struct TargetStats {
    GrayLevel mean;
    double variance = 1.0 / 3.0;

    /// mu_u = 0, sigma_u^2 = 1/3: moments of a uniform variable on (-1, 1).
    static constexpr TargetStats uniform() noexcept { return {}; }
};

/// Neumaier-compensated running sum. Order-dependent but deterministic.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double result() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// mu_f = <+>_{D} (1/N <x> f(x,y)), computed as the mean of the log
/// coordinates. Throws DomainError on an empty image.
GrayLevel log_mean(const GrayImage& img);

/// sigma_f^2 = (1/N) sum ||f(x,y) <-> mean||_E^2 (population variance).
double log_variance(const GrayImage& img, GrayLevel mean);

ImageStats compute_stats(const GrayImage& img);

/// Literal evaluation of mu_f: a left fold of lip_add over the pixels scaled by
/// 1/N, in row-major order. Slower and kept as a cross-check.
GrayLevel log_mean_fold_oracle(const GrayImage& img);

} // namespace lip
