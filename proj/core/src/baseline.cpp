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

#include "lip/baseline.hpp"

#include "lip/error.hpp"
#include "lip/stats.hpp"

#include <cmath>
#include <vector>

namespace lip {

StretchResult naive_stretch(const RawImage& img) {
    const double n = static_cast<double>(img.size());
    CompensatedSum sum;
    for (Sample g : img.pixels()) {
        sum.add(static_cast<double>(g));
    }
    const double mean = sum.result() / n;
    CompensatedSum squares;
    for (Sample g : img.pixels()) {
        const double d = static_cast<double>(g) - mean;
        squares.add(d * d);
    }
    const double sigma = std::sqrt(squares.result() / n);
    if (!(sigma > 0.0)) {
        throw ConstantImageError("cannot stretch a constant image");
    }

    const double m = static_cast<double>(img.max_value());
    const double gain = (m / std::sqrt(12.0)) / sigma;
    std::vector<Sample> out;
    out.reserve(img.size());
    std::size_t clipped = 0;
    for (Sample g : img.pixels()) {
        const double r = std::round((static_cast<double>(g) - mean) * gain + m / 2.0);
        if (r < 0.0) {
            out.push_back(0);
            ++clipped;
        } else if (r > m) {
            out.push_back(img.max_value());
            ++clipped;
        } else {
            out.push_back(static_cast<Sample>(r));
        }
    }
    return {RawImage(img.width(), img.height(), img.max_value(), std::move(out)), clipped};
}

} // namespace lip
