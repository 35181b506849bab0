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

#include "lip/image.hpp"

#include "lip/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lip {

namespace {

void check_dimensions(std::size_t width, std::size_t height, std::size_t count) {
    if (width == 0 || height == 0) {
        throw DomainError("image dimensions must be positive");
    }
    if (count / width != height || count % width != 0) {
        throw DomainError("pixel count " + std::to_string(count) + " does not match " +
                          std::to_string(width) + "x" + std::to_string(height));
    }
}

} // namespace

RawImage::RawImage(std::size_t width, std::size_t height, Sample max_value, std::vector<Sample> pixels)
    : width_(width), height_(height), max_value_(max_value), pixels_(std::move(pixels)) {
    check_dimensions(width_, height_, pixels_.size());
    if (max_value_ == 0) {
        throw DomainError("max value must be positive");
    }
    const auto bad = std::find_if(pixels_.begin(), pixels_.end(), [&](Sample s) { return s > max_value_; });
    if (bad != pixels_.end()) {
        throw DomainError("sample " + std::to_string(*bad) + " exceeds max value " + std::to_string(max_value_));
    }
}

RawImage::RawImage(std::size_t width, std::size_t height, Sample max_value, Sample fill)
    : RawImage(width, height, max_value, std::vector<Sample>(width * height, fill)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<GrayLevel> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dimensions(width_, height_, pixels_.size());
}

GrayImage GrayImage::from_values(std::size_t width, std::size_t height, std::span<const double> values) {
    std::vector<GrayLevel> pixels;
    pixels.reserve(values.size());
    for (double v : values) {
        pixels.push_back(GrayLevel::from_value(v));
    }
    return GrayImage(width, height, std::move(pixels));
}

GrayLevel decode_pixel(Sample g, Sample max_value) {
    if (max_value == 0) {
        throw DomainError("max value must be positive");
    }
    if (g > max_value) {
        throw DomainError("sample " + std::to_string(g) + " outside [0, " + std::to_string(max_value) + "]");
    }
    // (1+v)/(1-v) = (2g+1) / (2(M-g)+1) for v = (2g-M)/(M+1); both are exact integers.
    const double up = 2.0 * static_cast<double>(g) + 1.0;
    const double down = 2.0 * static_cast<double>(max_value - g) + 1.0;
    return GrayLevel::from_log(0.5 * (std::log(up) - std::log(down)));
}

EncodedSample encode_pixel_checked(GrayLevel v, Sample max_value) {
    const double m = static_cast<double>(max_value);
    const double r = std::round((v.value() * (m + 1.0) + m) / 2.0);
    if (r < 0.0) {
        return {0, true};
    }
    if (r > m) {
        return {max_value, true};
    }
    return {static_cast<Sample>(r), v.saturated()};
}

Sample encode_pixel(GrayLevel v, Sample max_value) { return encode_pixel_checked(v, max_value).code; }

GrayImage decode_image(const RawImage& img) {
    std::vector<GrayLevel> out;
    out.reserve(img.size());
    if (img.max_value() > 65535) {
        for (Sample g : img.pixels()) {
            out.push_back(decode_pixel(g, img.max_value()));
        }
        return GrayImage(img.width(), img.height(), std::move(out));
    }
    // Only M+1 distinct codes exist; a table avoids a log per pixel for 8/16-bit.
    std::vector<GrayLevel> table;
    table.reserve(static_cast<std::size_t>(img.max_value()) + 1);
    for (Sample g = 0; g <= img.max_value(); ++g) {
        table.push_back(decode_pixel(g, img.max_value()));
    }
    for (Sample g : img.pixels()) {
        out.push_back(table[g]);
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

RawImage encode_image(const GrayImage& img, Sample max_value, std::size_t* clamped) {
    if (max_value == 0) {
        throw DomainError("max value must be positive");
    }
    std::vector<Sample> out;
    out.reserve(img.size());
    std::size_t n_clamped = 0;
    for (GrayLevel v : img.pixels()) {
        const auto e = encode_pixel_checked(v, max_value);
        n_clamped += e.clamped ? 1 : 0;
        out.push_back(e.code);
    }
    if (clamped != nullptr) {
        *clamped = n_clamped;
    }
    return RawImage(img.width(), img.height(), max_value, std::move(out));
}

} // namespace lip
