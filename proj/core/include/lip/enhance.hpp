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
#include "lip/stats.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lip {

/// Variance below which an image is treated as constant.
inline constexpr double kMinLogVariance = 1e-18;

/// Margin kept from +/-1 when sampling transfer curves.
inline constexpr double kCurveMargin = 1.0 / 1024.0;

/// psi(v) = alpha <x> (v <+> beta). A straight line alpha * (x + phi(beta)) in
/// log coordinates.
struct AffineTransform {
    double alpha = 1.0;
    GrayLevel beta;

    static constexpr AffineTransform identity() noexcept { return {}; }

    friend bool operator==(const AffineTransform&, const AffineTransform&) = default;
};

/// Parameters that map an image with `stats` onto `target`:
/// alpha = sigma_u / sigma_f and, for a zero target mean, beta = <-> mu_f.
/// Throws ConstantImageError when stats.variance <= kMinLogVariance and
/// DomainError for a non-positive target variance.
AffineTransform estimate_transform(const ImageStats& stats, const TargetStats& target);

GrayLevel apply_point(const AffineTransform& t, GrayLevel v);

GrayImage apply_image(const AffineTransform& t, const GrayImage& img);

struct Enhancement {
    GrayImage image;
    AffineTransform transform;
    ImageStats stats;
};

/// Estimates the transform from the image's own statistics and applies it.
Enhancement enhance(const GrayImage& img, const TargetStats& target = TargetStats::uniform());

/// apply_point(compose(t2, t1), v) == apply_point(t2, apply_point(t1, v)).
/// Throws DegenerateTransformError when t1.alpha == 0.
AffineTransform compose(const AffineTransform& t2, const AffineTransform& t1);

/// Throws DegenerateTransformError when t.alpha == 0.
AffineTransform invert(const AffineTransform& t);

/// n points (v_i, psi(v_i)) with v_i evenly spaced over [-1 + margin, 1 - margin].
/// Throws DomainError if n < 2.
std::vector<std::pair<GrayLevel, GrayLevel>> sample_curve(const AffineTransform& t, std::size_t n);

/// Human-readable form, e.g. "3.02 <x> (v <-> 0.65)". A negative beta is shown
/// as subtraction of its opposite.
std::string describe(const AffineTransform& t, int decimals = 2);

} // namespace lip
