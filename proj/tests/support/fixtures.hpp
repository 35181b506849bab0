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

#include "lip/enhance.hpp"

#include <array>
#include <string_view>

namespace lip::test {

// Reference transforms for a dark, a bright and two low-contrast photographs.
// Negative betas are written v <-> |beta| in the source, i.e. v <+> beta here.
struct ReferenceTransform {
    std::string_view image;
    double alpha;
    double beta;

    AffineTransform transform() const { return {alpha, GrayLevel::from_value(beta)}; }
};

inline constexpr std::array<ReferenceTransform, 4> kReferenceTransforms{{
    {"news", 2.37, 0.71},
    {"cells", 3.02, -0.65},
    {"lax", 4.69, 0.01},
    {"miss", 2.03, -0.08},
}};

// tanh(alpha * atanh(beta)), i.e. psi(0), evaluated with mpmath at 40 digits.
inline constexpr std::array<double, 4> kReferenceAtZero{
    0.97060442717983195522,
    -0.98166360668317061527,
    0.04686720298528962956,
    -0.16132596011642862835,
};

} // namespace lip::test
