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

#include "lip/error.hpp"

#include <limits>
#include <string>

namespace lip {

namespace {

constexpr double kUpper = 1.0 - kBoundaryEpsilon;

} // namespace

GrayLevel::Clamped GrayLevel::clamp(double v) {
    if (!std::isfinite(v)) {
        throw DomainError("gray level must be a finite real, got " + std::to_string(v));
    }
    bool clamped = false;
    if (v > kUpper) {
        v = kUpper;
        clamped = true;
    } else if (v < -kUpper) {
        v = -kUpper;
        clamped = true;
    }
    return {GrayLevel(std::atanh(v)), clamped};
}

GrayLevel GrayLevel::from_value(double v) { return clamp(v).level; }

GrayLevel GrayLevel::from_log(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("log coordinate must be finite, got " + std::to_string(x));
    }
    return GrayLevel(x);
}

double GrayLevel::value() const noexcept {
    const double v = std::tanh(log_);
    if (v >= 1.0) {
        return std::nextafter(1.0, 0.0);
    }
    if (v <= -1.0) {
        return -std::nextafter(1.0, 0.0);
    }
    return v;
}

bool GrayLevel::saturated() const noexcept { return std::abs(std::tanh(log_)) >= 1.0; }

GrayLevel from_log_saturating(double x) noexcept {
    if (std::isinf(x)) {
        x = std::copysign(std::numeric_limits<double>::max(), x);
    }
    return GrayLevel(x);
}

GrayLevel lip_add(GrayLevel a, GrayLevel b) noexcept { return from_log_saturating(a.log() + b.log()); }

GrayLevel lip_sub(GrayLevel a, GrayLevel b) noexcept { return from_log_saturating(a.log() - b.log()); }

GrayLevel lip_neg(GrayLevel a) noexcept { return from_log_saturating(-a.log()); }

GrayLevel lip_smul(double lambda, GrayLevel v) {
    if (!std::isfinite(lambda)) {
        throw DomainError("scalar must be finite, got " + std::to_string(lambda));
    }
    return from_log_saturating(lambda * v.log());
}

double phi(GrayLevel v) noexcept { return v.log(); }

GrayLevel phi_inv(double x) { return GrayLevel::from_log(x); }

double lip_inner(GrayLevel a, GrayLevel b) noexcept { return a.log() * b.log(); }

double lip_norm(GrayLevel v) noexcept { return std::abs(v.log()); }

} // namespace lip
