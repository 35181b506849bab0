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
#include <filesystem>
#include <string>
#include <string_view>

namespace lip {

enum class PnmFormat { P2, P5 };

inline constexpr Sample kMaxPnmValue = 65535;

struct PnmHeader {
    PnmFormat format = PnmFormat::P5;
    std::size_t width = 0;
    std::size_t height = 0;
    Sample maxval = 255;
};

struct PgmFile {
    PnmHeader header;
    RawImage image;
};

/// Parses a P2 or P5 graymap. Comments and any whitespace layout are accepted
/// in the header; P5 samples are big-endian 16-bit when maxval > 255.
/// Throws ParseError naming the byte offset of the first problem.
PgmFile parse_pgm(std::string_view bytes);

inline RawImage read_pgm(std::string_view bytes) { return parse_pgm(bytes).image; }

/// Canonical serialization: "<magic>\n<w> <h>\n<maxval>\n" then samples. P2
/// puts each image row on its own line(s), wrapped before 70 characters.
/// Throws DomainError if the image's max value exceeds 65535.
std::string write_pgm(const RawImage& img, PnmFormat format = PnmFormat::P5);

/// Throws IoError if the file cannot be read, ParseError if it is malformed.
PgmFile load_pgm(const std::filesystem::path& path);

void save_pgm(const std::filesystem::path& path, const RawImage& img, PnmFormat format = PnmFormat::P5);

} // namespace lip
