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

#include "cli.hpp"

#include "lip/image.hpp"
#include "lip/pnm.hpp"
#include "lip/stats.hpp"

#include "support/generators.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace lip;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("logaffine_cli_" + std::to_string(counter++))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
    static inline int counter = 0;
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

// Dark gradient: codes 5..60 across the width.
RawImage dark_gradient() {
    std::vector<Sample> px;
    for (std::size_t y = 0; y < 8; ++y) {
        for (std::size_t x = 0; x < 32; ++x) {
            px.push_back(static_cast<Sample>(5 + (x * 55) / 31));
        }
    }
    return RawImage(32, 8, 255, px);
}

} // namespace

TEST_CASE("enhance writes an image and a report") {
    TempDir dir;
    save_pgm(dir / "in.pgm", dark_gradient());
    const Run r = run({"enhance", dir / "in.pgm", dir / "out.pgm"});
    REQUIRE(r.status == cli::kOk);
    CHECK(r.err.empty());
    const PgmFile out = load_pgm(dir / "out.pgm");
    CHECK(out.image.width() == 32);
    CHECK(out.image.height() == 8);
    CHECK(out.image.max_value() == 255);
    CHECK(r.out.find("beta        0.") != std::string::npos);
    CHECK(r.out.find("clipped     0") != std::string::npos);

    const Run j = run({"enhance", dir / "in.pgm", dir / "out2.pgm", "--report", "json"});
    REQUIRE(j.status == cli::kOk);
    const auto report = nlohmann::json::parse(j.out);
    CHECK(report["beta"].get<double>() > 0.0);
    CHECK(report["alpha"].get<double>() > 0.0);
    CHECK(report["clipped"].get<int>() == 0);
    CHECK(slurp(dir / "out.pgm") == slurp(dir / "out2.pgm"));
}

TEST_CASE("enhance on a normalized image reports unit gain") {
    TempDir dir;
    save_pgm(dir / "in.pgm", dark_gradient());
    REQUIRE(run({"enhance", dir / "in.pgm", dir / "once.pgm"}).status == 0);
    const Run again = run({"enhance", dir / "once.pgm", dir / "twice.pgm", "--report", "json"});
    REQUIRE(again.status == 0);
    CHECK(std::abs(nlohmann::json::parse(again.out)["alpha"].get<double>() - 1.0) <= 0.01);
}

TEST_CASE("enhance error paths") {
    TempDir dir;
    save_pgm(dir / "one.pgm", RawImage(1, 1, 255, Sample{40}));
    const Run c = run({"enhance", dir / "one.pgm", dir / "out.pgm"});
    CHECK(c.status == cli::kConstantImage);
    CHECK(c.err.rfind("lipenhance: error[E_CONSTANT_IMAGE]:", 0) == 0);
    CHECK(lines_of(c.err).size() == 1);
    CHECK_FALSE(fs::exists(dir / "out.pgm"));

    CHECK(run({"enhance", dir / "nope.pgm", dir / "out.pgm"}).status == cli::kIo);

    std::ofstream(dir / "bad.pgm") << "P7\n";
    const Run p = run({"enhance", dir / "bad.pgm", dir / "out.pgm"});
    CHECK(p.status == cli::kParse);
    CHECK(p.err.find("error[E_PARSE]") != std::string::npos);

    save_pgm(dir / "in.pgm", dark_gradient());
    CHECK(run({"enhance", dir / "in.pgm", dir / "o.pgm", "--target-var", "0"}).status == cli::kDomain);
    CHECK(run({"enhance", dir / "in.pgm", dir / "o.pgm", "--target-mean", "1"}).status == cli::kDomain);
    CHECK(run({"enhance", dir / "in.pgm", dir / "o.pgm", "--report", "xml"}).status == cli::kUsage);
    CHECK(run({"enhance", dir / "in.pgm"}).status == cli::kUsage);
    CHECK(run({}).status == cli::kUsage);
    CHECK(run({"frobnicate"}).status == cli::kUsage);
    CHECK(run({"--help"}).status == cli::kOk);
}

TEST_CASE("stats report") {
    TempDir dir;
    // With M = 4, code 4 decodes to 0.8 and code 2 to 0.
    save_pgm(dir / "two.pgm", RawImage(2, 1, 4, std::vector<Sample>{4, 2}));
    const Run r = run({"stats", dir / "two.pgm", "--report", "json"});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.is_object());
    for (const char* key : {"mean", "variance", "count", "alpha", "beta"}) {
        CHECK(j.contains(key));
    }
    CHECK(std::abs(j["mean"].get<double>() - 0.5) <= 1e-12);
    const double ln3 = std::log(3.0);
    CHECK(j["variance"].get<double>() == doctest::Approx(0.25 * ln3 * ln3).epsilon(1e-12));
    CHECK(j["count"].get<int>() == 2);

    save_pgm(dir / "flat.pgm", RawImage(4, 4, 255, Sample{127}));
    const Run flat = run({"stats", dir / "flat.pgm", "--report", "json"});
    REQUIRE(flat.status == 0);
    const auto f = nlohmann::json::parse(flat.out);
    CHECK(f["variance"].get<double>() == 0.0);
    CHECK(f["alpha"].is_null());
    CHECK(f["beta"].is_null());
    const Run flat_text = run({"stats", dir / "flat.pgm"});
    CHECK(flat_text.out.find("alpha       n/a") != std::string::npos);

    const Run text = run({"stats", dir / "two.pgm", "--decimals", "4"});
    CHECK(text.out.find("mean        0.5000") != std::string::npos);
    CHECK(text.out.find("count       2") != std::string::npos);
}

TEST_CASE("apply with the identity reproduces the file") {
    TempDir dir;
    const std::string golden = std::string(LOGAFFINE_TEST_DATA_DIR) + "/gradient8.pgm";
    REQUIRE(run({"apply", golden, dir / "same.pgm", "--alpha", "1", "--beta", "0"}).status == 0);
    CHECK(slurp(dir / "same.pgm") == slurp(golden));

    const std::string ascii = std::string(LOGAFFINE_TEST_DATA_DIR) + "/wide_ascii_comments.pgm";
    REQUIRE(run({"apply", ascii, dir / "canon.pgm", "--alpha", "1", "--beta", "0"}).status == 0);
    CHECK(slurp(dir / "canon.pgm") == write_pgm(load_pgm(ascii).image, PnmFormat::P2));
}

TEST_CASE("apply with reference coefficients") {
    TempDir dir;
    std::vector<Sample> mids{100, 120, 128, 140, 160};
    save_pgm(dir / "mid.pgm", RawImage(5, 1, 255, mids));
    REQUIRE(run({"apply", dir / "mid.pgm", dir / "bright.pgm", "--alpha", "2.37", "--beta", "0.71"}).status == 0);
    const RawImage bright = load_pgm(dir / "bright.pgm").image;
    for (std::size_t i = 0; i < mids.size(); ++i) {
        CHECK(bright.pixels()[i] > mids[i]);
        const double v = (2.0 * mids[i] - 255.0) / 256.0;
        const double expect = std::tanh(2.37 * (std::atanh(v) + std::atanh(0.71)));
        CHECK(bright.pixels()[i] == static_cast<Sample>(std::round((expect * 256.0 + 255.0) / 2.0)));
    }

    REQUIRE(run({"apply", dir / "mid.pgm", dir / "dark.pgm", "--alpha", "3.02", "--beta", "-0.65"}).status == 0);
    const RawImage dark = load_pgm(dir / "dark.pgm").image;
    for (std::size_t i = 0; i < mids.size(); ++i) {
        CHECK(dark.pixels()[i] < mids[i]);
    }

    CHECK(run({"apply", dir / "mid.pgm", dir / "x.pgm", "--alpha", "2"}).status == cli::kUsage);
    CHECK(run({"apply", dir / "mid.pgm", dir / "x.pgm", "--beta", "0.1"}).status == cli::kUsage);
    CHECK(run({"apply", dir / "mid.pgm", dir / "x.pgm", "--alpha", "2", "--beta", "1.2"}).status == cli::kDomain);
}

TEST_CASE("curve csv") {
    const Run id = run({"curve", "--alpha", "1", "--beta", "0", "--samples", "17"});
    REQUIRE(id.status == 0);
    const auto rows = lines_of(id.out);
    REQUIRE(rows.size() == 18);
    CHECK(rows[0] == "v,psi_v");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto comma = rows[i].find(',');
        CHECK(rows[i].substr(0, comma) == rows[i].substr(comma + 1));
    }

    const Run three = run({"curve", "--alpha", "2.37", "--beta", "0.71", "--samples", "3"});
    REQUIRE(three.status == 0);
    CHECK(lines_of(three.out)[2] == "0,0.970604427");
    CHECK(lines_of(three.out)[1] == "-0.999023438,-0.999998095");

    const Run psi1 = run({"curve", "--alpha", "2.37", "--beta", "0.71"});
    const auto all = lines_of(psi1.out);
    REQUIRE(all.size() == 257);
    double prev = -2.0;
    for (std::size_t i = 1; i < all.size(); ++i) {
        const double psi = std::stod(all[i].substr(all[i].find(',') + 1));
        CHECK(psi > prev);
        prev = psi;
    }

    CHECK(run({"curve", "--alpha", "1"}).status == cli::kUsage);
    CHECK(run({"curve", "--alpha", "1", "--beta", "0", "--samples", "1"}).status == cli::kUsage);
}

TEST_CASE("baseline clips where the log-affine enhancement does not") {
    TempDir dir;
    std::vector<Sample> px(1024, 12);
    for (std::size_t i = 0; i < 1024; i += 37) {
        px[i] = 240;
    }
    save_pgm(dir / "extreme.pgm", RawImage(32, 32, 255, px));

    const auto lip = nlohmann::json::parse(run({"enhance", dir / "extreme.pgm", dir / "l.pgm", "--report", "json"}).out);
    CHECK(lip["method"] == "lip");
    CHECK(lip["clipped"].get<int>() == 0);

    const Run b = run({"enhance", dir / "extreme.pgm", dir / "b.pgm", "--baseline", "--report", "json"});
    REQUIRE(b.status == 0);
    const auto base = nlohmann::json::parse(b.out);
    CHECK(base["method"] == "baseline");
    CHECK(base["clipped"].get<int>() > 0);
    CHECK(base["lip_clipped"].get<int>() == 0);
}
