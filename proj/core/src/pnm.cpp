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

#include "lip/pnm.hpp"

#include "lip/error.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <vector>

namespace lip {

std::string_view to_string(ParseErrorKind kind) noexcept {
    switch (kind) {
    case ParseErrorKind::BadMagic: return "bad magic";
    case ParseErrorKind::BadNumber: return "bad number";
    case ParseErrorKind::BadHeaderValue: return "bad header value";
    case ParseErrorKind::TruncatedHeader: return "truncated header";
    case ParseErrorKind::PixelCountMismatch: return "pixel count mismatch";
    case ParseErrorKind::SampleOutOfRange: return "sample out of range";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail)
    : Error("E_PARSE", std::string(to_string(kind)) + " at byte " + std::to_string(offset) + ": " + detail),
      kind_(kind), offset_(offset) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Scanner {
public:
    explicit Scanner(std::string_view bytes) : bytes_(bytes) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }

    void skip_space_and_comments() {
        while (!at_end()) {
            const char c = bytes_[pos_];
            if (is_space(c)) {
                ++pos_;
            } else if (c == '#') {
                while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    struct Number {
        std::uint64_t value;
        std::size_t offset;
        bool overflow;
    };

    // Unsigned decimal token ending in whitespace, a comment or end of input.
    Number number(const char* what) {
        const std::size_t start = pos_;
        if (!is_digit(bytes_[pos_])) {
            throw ParseError(ParseErrorKind::BadNumber, start, std::string("expected ") + what);
        }
        std::uint64_t value = 0;
        bool overflow = false;
        while (!at_end() && is_digit(bytes_[pos_])) {
            const auto digit = static_cast<std::uint64_t>(bytes_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
                overflow = true;
            } else {
                value = value * 10 + digit;
            }
            ++pos_;
        }
        if (!at_end() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
            throw ParseError(ParseErrorKind::BadNumber, pos_, std::string("unexpected character in ") + what);
        }
        return {value, start, overflow};
    }

    std::size_t remaining() const { return bytes_.size() - pos_; }
    unsigned char byte_at(std::size_t i) const { return static_cast<unsigned char>(bytes_[i]); }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

std::uint64_t header_value(Scanner& s, const char* what, std::uint64_t lo, std::uint64_t hi) {
    s.skip_space_and_comments();
    if (s.at_end()) {
        throw ParseError(ParseErrorKind::TruncatedHeader, s.pos(), std::string("missing ") + what);
    }
    const auto n = s.number(what);
    if (n.overflow || n.value < lo || n.value > hi) {
        throw ParseError(ParseErrorKind::BadHeaderValue, n.offset,
                         std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return n.value;
}

std::vector<Sample> read_binary_raster(Scanner& s, const PnmHeader& h) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (s.at_end() || !is_space(static_cast<char>(s.byte_at(s.pos())))) {
        throw ParseError(ParseErrorKind::TruncatedHeader, s.pos(), "missing whitespace after maxval");
    }
    s.advance(1);

    const std::size_t count = h.width * h.height;
    const std::size_t sample_bytes = h.maxval > 255 ? 2 : 1;
    const std::size_t start = s.pos();
    if (s.remaining() != count * sample_bytes) {
        const std::size_t have = s.remaining() / sample_bytes;
        throw ParseError(ParseErrorKind::PixelCountMismatch, start + std::min(s.remaining(), count * sample_bytes),
                         "expected " + std::to_string(count) + " samples, found " +
                             (s.remaining() > count * sample_bytes ? "trailing data" : std::to_string(have)));
    }
    std::vector<Sample> pixels(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t at = start + i * sample_bytes;
        Sample v = s.byte_at(at);
        if (sample_bytes == 2) {
            v = (v << 8) | s.byte_at(at + 1);
        }
        if (v > h.maxval) {
            throw ParseError(ParseErrorKind::SampleOutOfRange, at,
                             "sample " + std::to_string(v) + " exceeds maxval " + std::to_string(h.maxval));
        }
        pixels[i] = v;
    }
    return pixels;
}

std::vector<Sample> read_ascii_raster(Scanner& s, const PnmHeader& h) {
    const std::size_t count = h.width * h.height;
    std::vector<Sample> pixels;
    pixels.reserve(std::min(count, s.remaining() / 2 + 1));
    for (;;) {
        s.skip_space_and_comments();
        if (s.at_end()) {
            break;
        }
        if (pixels.size() == count) {
            throw ParseError(ParseErrorKind::PixelCountMismatch, s.pos(),
                             "more than " + std::to_string(count) + " samples");
        }
        const auto n = s.number("sample");
        if (n.overflow || n.value > h.maxval) {
            throw ParseError(ParseErrorKind::SampleOutOfRange, n.offset,
                             "sample exceeds maxval " + std::to_string(h.maxval));
        }
        pixels.push_back(static_cast<Sample>(n.value));
    }
    if (pixels.size() != count) {
        throw ParseError(ParseErrorKind::PixelCountMismatch, s.pos(),
                         "expected " + std::to_string(count) + " samples, found " + std::to_string(pixels.size()));
    }
    return pixels;
}

} // namespace

PgmFile parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw ParseError(ParseErrorKind::BadMagic, 0, "expected P2 or P5");
    }
    if (bytes.size() > 2 && !is_space(bytes[2]) && bytes[2] != '#') {
        throw ParseError(ParseErrorKind::BadMagic, 2, "magic must be followed by whitespace");
    }
    PnmHeader h;
    h.format = bytes[1] == '2' ? PnmFormat::P2 : PnmFormat::P5;

    Scanner s(bytes);
    s.advance(2);
    constexpr std::uint64_t kMaxDim = std::numeric_limits<std::uint32_t>::max();
    h.width = header_value(s, "width", 1, kMaxDim);
    h.height = header_value(s, "height", 1, kMaxDim);
    if (h.width > std::numeric_limits<std::size_t>::max() / 2 / h.height) {
        throw ParseError(ParseErrorKind::BadHeaderValue, s.pos(), "image too large");
    }
    h.maxval = static_cast<Sample>(header_value(s, "maxval", 1, kMaxPnmValue));

    auto pixels = h.format == PnmFormat::P5 ? read_binary_raster(s, h) : read_ascii_raster(s, h);
    return {h, RawImage(h.width, h.height, h.maxval, std::move(pixels))};
}

std::string write_pgm(const RawImage& img, PnmFormat format) {
    if (img.max_value() > kMaxPnmValue) {
        throw DomainError("PGM max value must be in [1, 65535], got " + std::to_string(img.max_value()));
    }
    std::string out = format == PnmFormat::P5 ? "P5\n" : "P2\n";
    out += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n";
    out += std::to_string(img.max_value()) + "\n";

    const auto px = img.pixels();
    if (format == PnmFormat::P5) {
        const bool wide = img.max_value() > 255;
        out.reserve(out.size() + px.size() * (wide ? 2 : 1));
        for (Sample v : px) {
            if (wide) {
                out.push_back(static_cast<char>((v >> 8) & 0xff));
            }
            out.push_back(static_cast<char>(v & 0xff));
        }
        return out;
    }

    constexpr std::size_t kMaxLine = 70;
    for (std::size_t y = 0; y < img.height(); ++y) {
        std::size_t line = 0;
        for (std::size_t x = 0; x < img.width(); ++x) {
            const std::string token = std::to_string(px[y * img.width() + x]);
            if (line > 0 && line + 1 + token.size() > kMaxLine) {
                out += '\n';
                line = 0;
            }
            if (line > 0) {
                out += ' ';
                ++line;
            }
            out += token;
            line += token.size();
        }
        out += '\n';
    }
    return out;
}

PgmFile load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("failed reading " + path.string());
    }
    return parse_pgm(bytes);
}

void save_pgm(const std::filesystem::path& path, const RawImage& img, PnmFormat format) {
    const std::string bytes = write_pgm(img, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

} // namespace lip
