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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lip {

// Base of every error the library throws. code() is a stable, greppable tag.
class Error : public std::runtime_error {
public:
    Error(std::string_view code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    std::string_view code() const noexcept { return code_; }

private:
    std::string_view code_;
};

// Argument outside the domain of an operation (pixel > M, NaN gray level, n < 2...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("E_DOMAIN", message) {}
};

// No finite gain can normalize an image whose log-variance is (numerically) zero.
class ConstantImageError : public Error {
public:
    explicit ConstantImageError(const std::string& message)
        : Error("E_CONSTANT_IMAGE", message) {}
};

// Transform with a zero gain cannot be inverted or used as the inner map of a composition.
class DegenerateTransformError : public Error {
public:
    explicit DegenerateTransformError(const std::string& message)
        : Error("E_DEGENERATE_TRANSFORM", message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("E_IO", message) {}
};

enum class ParseErrorKind {
    BadMagic,
    BadNumber,
    BadHeaderValue,
    TruncatedHeader,
    PixelCountMismatch,
    SampleOutOfRange,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    // Byte offset into the input where the problem was detected.
    std::size_t offset() const noexcept { return offset_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
};

} // namespace lip
