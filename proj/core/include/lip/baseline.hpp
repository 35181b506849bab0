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

#include "lip/image.hpp"

#include <cstddef>

namespace lip {

struct StretchResult {
    RawImage image;
    /// Samples whose stretched value left [0, M] and were truncated.
    std::size_t clipped = 0;
};

/// Classical linear contrast stretch in raw [0, M] space, used only as a
/// comparison: shifts the mean to M/2 and scales the standard deviation to
/// that of a uniform variable on [0, M] (M / sqrt(12)), then truncates.
/// Throws ConstantImageError for a constant image.
StretchResult naive_stretch(const RawImage& img);

} // namespace lip
