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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lip {

using Sample = std::uint32_t;

/// Integer raster with samples in [0, max_value], row-major.
class RawImage {
public:
    /// Throws DomainError on zero dimensions, max_value == 0, a size mismatch
    /// or any sample above max_value.
    RawImage(std::size_t width, std::size_t height, Sample max_value, std::vector<Sample> pixels);

    /// width x height image filled with `fill`.
    RawImage(std::size_t width, std::size_t height, Sample max_value, Sample fill = 0);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }
    Sample max_value() const noexcept { return max_value_; }

    std::span<const Sample> pixels() const noexcept { return pixels_; }
    Sample at(std::size_t x, std::size_t y) const { return pixels_.at(y * width_ + x); }

    friend bool operator==(const RawImage&, const RawImage&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    Sample max_value_;
    std::vector<Sample> pixels_;
};

/// Continuous gray-level image over a width x height domain, row-major.
class GrayImage {
public:
    /// Throws DomainError on zero dimensions or a size mismatch.
    GrayImage(std::size_t width, std::size_t height, std::vector<GrayLevel> pixels);

    /// Convenience for tests and tools: builds each pixel with GrayLevel::from_value.
    static GrayImage from_values(std::size_t width, std::size_t height, std::span<const double> values);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    /// Pixel count.
    std::size_t size() const noexcept { return pixels_.size(); }

    std::span<const GrayLevel> pixels() const noexcept { return pixels_; }
    GrayLevel at(std::size_t x, std::size_t y) const { return pixels_.at(y * width_ + x); }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<GrayLevel> pixels_;
};

/// Maps code g of [0, M] to (2g - M) / (M + 1). The half-step shrink keeps
/// both end codes strictly inside (-1, 1). Throws DomainError if g > M or M == 0.
GrayLevel decode_pixel(Sample g, Sample max_value);

/// Inverse of decode_pixel: round-half-away-from-zero of (v (M+1) + M) / 2,
/// clamped to [0, M].
Sample encode_pixel(GrayLevel v, Sample max_value);

struct EncodedSample {
    Sample code;
    /// Rounding fell outside [0, M] or the gray level saturated on readout.
    bool clamped;
};

EncodedSample encode_pixel_checked(GrayLevel v, Sample max_value);

GrayImage decode_image(const RawImage& img);

/// If `clamped` is given it receives the number of clamped samples.
RawImage encode_image(const GrayImage& img, Sample max_value, std::size_t* clamped = nullptr);

} // namespace lip
