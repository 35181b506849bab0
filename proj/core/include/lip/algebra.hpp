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

#include <cmath>
#include <compare>

namespace lip {

/// Half-width of the guard band kept between constructed gray levels and +/-1.
inline constexpr double kBoundaryEpsilon = 1e-12;

/// A gray level of the bounded logarithmic space E = (-1, 1).
///
/// The level is stored by its log coordinate phi(v) = atanh(v), which is the
/// isomorphic image of E on the real line. Every operation of the space is an
/// ordinary real operation on that coordinate, so results stay exactly inside
/// the open interval no matter how close to +/-1 they land. value() reads the
/// level back as tanh(phi).
class GrayLevel {
public:
    struct Clamped;

    /// The neutral element (mid-gray, v = 0).
    constexpr GrayLevel() noexcept = default;

    /// Builds a level from a real in E. Values outside [-1+eps, 1-eps] are
    /// pulled onto that band. Throws DomainError for NaN or infinity.
    static GrayLevel from_value(double v);

    /// Same as from_value() but also reports whether the input was clamped.
    static Clamped clamp(double v);

    /// Inverse isomorphism: the level whose log coordinate is x.
    /// Throws DomainError for non-finite x.
    static GrayLevel from_log(double x);

    /// tanh(phi). Always strictly inside (-1, 1).
    double value() const noexcept;

    /// phi(v) = 1/2 ln((1+v)/(1-v)).
    constexpr double log() const noexcept { return log_; }

    /// True when tanh(phi) is not representable inside (-1, 1) as a double and
    /// value() had to return the nearest interior double instead.
    bool saturated() const noexcept;

    friend constexpr bool operator==(GrayLevel, GrayLevel) noexcept = default;
    friend constexpr auto operator<=>(GrayLevel a, GrayLevel b) noexcept { return a.log_ <=> b.log_; }

private:
    friend GrayLevel from_log_saturating(double x) noexcept;

    explicit constexpr GrayLevel(double log) noexcept : log_(log) {}

    double log_ = 0.0;
};

struct GrayLevel::Clamped {
    GrayLevel level;
    bool clamped = false;
};

/// from_log() for results of the space operations: overflow of the log
/// coordinate saturates to the largest finite double instead of throwing.
GrayLevel from_log_saturating(double x) noexcept;

/// v1 <+> v2 = (v1 + v2) / (1 + v1 v2)
GrayLevel lip_add(GrayLevel a, GrayLevel b) noexcept;

/// v1 <-> v2 = (v1 - v2) / (1 - v1 v2)
GrayLevel lip_sub(GrayLevel a, GrayLevel b) noexcept;

/// Opposite element, <-> v = -v.
GrayLevel lip_neg(GrayLevel a) noexcept;

/// lambda <x> v = ((1+v)^l - (1-v)^l) / ((1+v)^l + (1-v)^l), evaluated as
/// phi_inv(lambda * phi(v)) which never overflows. Throws DomainError for a
/// non-finite lambda.
GrayLevel lip_smul(double lambda, GrayLevel v);

double phi(GrayLevel v) noexcept;

/// Throws DomainError for non-finite x.
GrayLevel phi_inv(double x);

/// (v1 | v2)_E = phi(v1) phi(v2)
double lip_inner(GrayLevel a, GrayLevel b) noexcept;

/// ||v||_E = |phi(v)|
double lip_norm(GrayLevel v) noexcept;

inline GrayLevel operator+(GrayLevel a, GrayLevel b) noexcept { return lip_add(a, b); }
inline GrayLevel operator-(GrayLevel a, GrayLevel b) noexcept { return lip_sub(a, b); }
inline GrayLevel operator-(GrayLevel a) noexcept { return lip_neg(a); }
inline GrayLevel operator*(double lambda, GrayLevel v) { return lip_smul(lambda, v); }

} // namespace lip
