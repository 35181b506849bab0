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

#include "lip/error.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace lip {

namespace {

void require_finite(double alpha) {
    if (!std::isfinite(alpha)) {
        throw DomainError("transform gain must be finite");
    }
}

std::string fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

} // namespace

AffineTransform estimate_transform(const ImageStats& stats, const TargetStats& target) {
    if (!(target.variance > 0.0) || !std::isfinite(target.variance)) {
        throw DomainError("target variance must be positive and finite");
    }
    if (!(stats.variance > kMinLogVariance)) {
        throw ConstantImageError("image log-variance " + std::to_string(stats.variance) +
                                 " is too small to normalize (constant image)");
    }
    const double source_sigma = std::sqrt(stats.variance);
    const double target_sigma = std::sqrt(target.variance);
    const double alpha = target_sigma / source_sigma;

    // Output mean is alpha * (mu_f + b); solve for b so it lands on the target.
    // With a zero target mean this is exactly b = -phi(mu_f).
    const double offset = phi(target.mean) * source_sigma / target_sigma - phi(stats.mean);
    return {alpha, from_log_saturating(offset)};
}

GrayLevel apply_point(const AffineTransform& t, GrayLevel v) { return lip_smul(t.alpha, lip_add(v, t.beta)); }

GrayImage apply_image(const AffineTransform& t, const GrayImage& img) {
    require_finite(t.alpha);
    std::vector<GrayLevel> out;
    out.reserve(img.size());
    for (GrayLevel v : img.pixels()) {
        out.push_back(apply_point(t, v));
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

Enhancement enhance(const GrayImage& img, const TargetStats& target) {
    const ImageStats stats = compute_stats(img);
    const AffineTransform t = estimate_transform(stats, target);
    return {apply_image(t, img), t, stats};
}

AffineTransform compose(const AffineTransform& t2, const AffineTransform& t1) {
    require_finite(t1.alpha);
    require_finite(t2.alpha);
    if (t1.alpha == 0.0) {
        throw DegenerateTransformError("cannot compose after a transform with zero gain");
    }
    // a2 (a1 (x + b1) + b2) = a2 a1 (x + b1 + b2 / a1)
    return {t2.alpha * t1.alpha, from_log_saturating(phi(t1.beta) + phi(t2.beta) / t1.alpha)};
}

AffineTransform invert(const AffineTransform& t) {
    require_finite(t.alpha);
    if (t.alpha == 0.0) {
        throw DegenerateTransformError("transform with zero gain is not invertible");
    }
    // y = a (x + b)  =>  x = (1/a) (y - a b)
    return {1.0 / t.alpha, from_log_saturating(-t.alpha * phi(t.beta))};
}

std::vector<std::pair<GrayLevel, GrayLevel>> sample_curve(const AffineTransform& t, std::size_t n) {
    if (n < 2) {
        throw DomainError("curve needs at least 2 samples, got " + std::to_string(n));
    }
    require_finite(t.alpha);
    const double lo = -1.0 + kCurveMargin;
    const double step = (2.0 - 2.0 * kCurveMargin) / static_cast<double>(n - 1);
    std::vector<std::pair<GrayLevel, GrayLevel>> curve;
    curve.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = (i + 1 == n) ? -lo : lo + static_cast<double>(i) * step;
        const GrayLevel in = GrayLevel::from_value(v);
        curve.emplace_back(in, apply_point(t, in));
    }
    return curve;
}

std::string describe(const AffineTransform& t, int decimals) {
    const double beta = t.beta.value();
    const char* op = beta < 0.0 ? "<->" : "<+>";
    return fixed(t.alpha, decimals) + " <x> (v " + op + " " + fixed(std::abs(beta), decimals) + ")";
}

} // namespace lip
