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

#include "lip/stats.hpp"

#include "lip/error.hpp"

#include <cmath>

namespace lip {

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

// GrayImage guarantees at least one pixel; the checks below only guard the contract
// should that ever change.
GrayLevel log_mean(const GrayImage& img) {
    if (img.size() == 0) {
        throw DomainError("log mean of an empty image");
    }
    CompensatedSum sum;
    for (GrayLevel v : img.pixels()) {
        sum.add(phi(v));
    }
    return from_log_saturating(sum.result() / static_cast<double>(img.size()));
}

double log_variance(const GrayImage& img, GrayLevel mean) {
    if (img.size() == 0) {
        throw DomainError("log variance of an empty image");
    }
    const double centre = phi(mean);
    CompensatedSum sum;
    for (GrayLevel v : img.pixels()) {
        const double d = phi(v) - centre;
        sum.add(d * d);
    }
    return sum.result() / static_cast<double>(img.size());
}

ImageStats compute_stats(const GrayImage& img) {
    const GrayLevel mean = log_mean(img);
    return {mean, log_variance(img, mean), img.size()};
}

GrayLevel log_mean_fold_oracle(const GrayImage& img) {
    if (img.size() == 0) {
        throw DomainError("log mean of an empty image");
    }
    const double weight = 1.0 / static_cast<double>(img.size());
    GrayLevel acc;
    for (GrayLevel v : img.pixels()) {
        acc = lip_add(acc, lip_smul(weight, v));
    }
    return acc;
}

} // namespace lip
