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

#include "lip/algebra.hpp"
#include "lip/baseline.hpp"
#include "lip/enhance.hpp"
#include "lip/error.hpp"
#include "lip/image.hpp"
#include "lip/pnm.hpp"
#include "lip/stats.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>

namespace lip::cli {

namespace {

constexpr const char* kProgram = "lipenhance";

struct Config {
    std::string input;
    std::string output;
    double alpha = 1.0;
    double beta = 0.0;
    double target_mean = 0.0;
    double target_variance = 1.0 / 3.0;
    std::size_t samples = 256;
    std::string report = "text";
    int decimals = 2;
    bool baseline = false;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& message) : Error("E_USAGE", message) {}
};

std::string format_g9(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

TargetStats target_from(const Config& c) {
    if (!(c.target_mean > -1.0 && c.target_mean < 1.0)) {
        throw DomainError("--target-mean must lie in (-1, 1)");
    }
    if (!(c.target_variance > 0.0) || !std::isfinite(c.target_variance)) {
        throw DomainError("--target-var must be positive");
    }
    return {GrayLevel::from_value(c.target_mean), c.target_variance};
}

AffineTransform transform_from(const Config& c) {
    if (!std::isfinite(c.alpha)) {
        throw DomainError("--alpha must be finite");
    }
    if (!(c.beta > -1.0 && c.beta < 1.0)) {
        throw DomainError("--beta must lie in (-1, 1)");
    }
    return {c.alpha, GrayLevel::from_value(c.beta)};
}

struct Report {
    ImageStats stats;
    std::optional<AffineTransform> transform;
    std::optional<std::string> method;
    std::optional<std::size_t> clipped;
    std::optional<std::size_t> lip_clipped;
};

void print_report(const Report& r, const Config& c, std::ostream& out) {
    if (c.report == "json") {
        nlohmann::json j;
        j["mean"] = r.stats.mean.value();
        j["variance"] = r.stats.variance;
        j["count"] = r.stats.count;
        if (r.transform) {
            j["alpha"] = r.transform->alpha;
            j["beta"] = r.transform->beta.value();
            j["transform"] = describe(*r.transform, c.decimals);
        } else {
            j["alpha"] = nullptr;
            j["beta"] = nullptr;
        }
        if (r.method) {
            j["method"] = *r.method;
        }
        if (r.clipped) {
            j["clipped"] = *r.clipped;
        }
        if (r.lip_clipped) {
            j["lip_clipped"] = *r.lip_clipped;
        }
        out << j.dump() << '\n';
        return;
    }

    auto row = [&out](const char* key, const std::string& value) {
        out << std::left << std::setw(12) << key << value << '\n';
    };
    row("mean", format_fixed(r.stats.mean.value(), c.decimals));
    row("variance", format_fixed(r.stats.variance, c.decimals));
    row("count", std::to_string(r.stats.count));
    if (r.transform) {
        row("alpha", format_fixed(r.transform->alpha, c.decimals));
        row("beta", format_fixed(r.transform->beta.value(), c.decimals));
        row("transform", describe(*r.transform, c.decimals));
    } else {
        row("alpha", "n/a");
        row("beta", "n/a");
    }
    if (r.method) {
        row("method", *r.method);
    }
    if (r.clipped) {
        row("clipped", std::to_string(*r.clipped));
    }
    if (r.lip_clipped) {
        row("lip_clipped", std::to_string(*r.lip_clipped));
    }
}

void cmd_enhance(const Config& c, std::ostream& out) {
    const TargetStats target = target_from(c);
    const PgmFile in = load_pgm(c.input);
    const Enhancement e = enhance(decode_image(in.image), target);

    std::size_t lip_clipped = 0;
    const RawImage lip_out = encode_image(e.image, in.image.max_value(), &lip_clipped);

    Report report{e.stats, e.transform, std::string("lip"), lip_clipped, std::nullopt};
    if (c.baseline) {
        const StretchResult stretched = naive_stretch(in.image);
        save_pgm(c.output, stretched.image, in.header.format);
        report.method = "baseline";
        report.clipped = stretched.clipped;
        report.lip_clipped = lip_clipped;
    } else {
        save_pgm(c.output, lip_out, in.header.format);
    }
    print_report(report, c, out);
}

void cmd_stats(const Config& c, std::ostream& out) {
    const TargetStats target = target_from(c);
    const PgmFile in = load_pgm(c.input);
    Report report{compute_stats(decode_image(in.image)), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (report.stats.variance > kMinLogVariance) {
        report.transform = estimate_transform(report.stats, target);
    }
    print_report(report, c, out);
}

void cmd_apply(const Config& c) {
    const AffineTransform t = transform_from(c);
    const PgmFile in = load_pgm(c.input);
    const GrayImage result = apply_image(t, decode_image(in.image));
    save_pgm(c.output, encode_image(result, in.image.max_value()), in.header.format);
}

void cmd_curve(const Config& c, std::ostream& out) {
    const AffineTransform t = transform_from(c);
    std::string text = "v,psi_v\n";
    for (const auto& [v, psi] : sample_curve(t, c.samples)) {
        text += format_g9(v.value());
        text += ',';
        text += format_g9(psi.value());
        text += '\n';
    }
    out << text;
}

int exit_code_for(const Error& e) {
    const std::string_view code = e.code();
    if (code == "E_IO") return kIo;
    if (code == "E_PARSE") return kParse;
    if (code == "E_CONSTANT_IMAGE") return kConstantImage;
    if (code == "E_USAGE") return kUsage;
    return kDomain;
}

std::string single_line(std::string s) {
    for (char& ch : s) {
        if (ch == '\n' || ch == '\r') {
            ch = ' ';
        }
    }
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    return s;
}

int fail(std::ostream& err, std::string_view code, const std::string& message, int status) {
    err << kProgram << ": error[" << code << "]: " << single_line(message) << '\n';
    return status;
}

void add_target_options(CLI::App* cmd, Config& c) {
    cmd->add_option("--target-mean", c.target_mean, "Target log-mean gray level in (-1, 1)")->capture_default_str();
    cmd->add_option("--target-var", c.target_variance, "Target log-variance (> 0)")->capture_default_str();
    cmd->add_option("--report", c.report, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--decimals", c.decimals, "Decimals shown in text reports")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();
}

void add_transform_options(CLI::App* cmd, Config& c) {
    cmd->add_option("--alpha", c.alpha, "Log-domain gain")->required();
    cmd->add_option("--beta", c.beta, "Log-domain offset gray level in (-1, 1)")->required();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Logarithmic affine enhancement of PGM graymaps", kProgram};
    app.require_subcommand(1);

    auto* enhance_cmd = app.add_subcommand("enhance", "Normalize an image's log-mean and log-variance");
    enhance_cmd->add_option("input", c.input, "Input PGM")->required();
    enhance_cmd->add_option("output", c.output, "Output PGM")->required();
    add_target_options(enhance_cmd, c);
    enhance_cmd->add_flag("--baseline", c.baseline, "Write a naive truncating linear stretch instead");

    auto* stats_cmd = app.add_subcommand("stats", "Print log-domain statistics and the estimated transform");
    stats_cmd->add_option("input", c.input, "Input PGM")->required();
    add_target_options(stats_cmd, c);

    auto* apply_cmd = app.add_subcommand("apply", "Apply psi(v) = alpha <x> (v <+> beta) to every pixel");
    apply_cmd->add_option("input", c.input, "Input PGM")->required();
    apply_cmd->add_option("output", c.output, "Output PGM")->required();
    add_transform_options(apply_cmd, c);

    auto* curve_cmd = app.add_subcommand("curve", "Print the transfer curve as CSV");
    add_transform_options(curve_cmd, c);
    curve_cmd->add_option("--samples", c.samples, "Number of samples (>= 2)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return fail(err, "E_USAGE", e.what(), kUsage);
    }

    try {
        if (enhance_cmd->parsed()) {
            cmd_enhance(c, out);
        } else if (stats_cmd->parsed()) {
            cmd_stats(c, out);
        } else if (apply_cmd->parsed()) {
            cmd_apply(c);
        } else if (curve_cmd->parsed()) {
            cmd_curve(c, out);
        }
    } catch (const Error& e) {
        return fail(err, e.code(), e.what(), exit_code_for(e));
    } catch (const std::exception& e) {
        return fail(err, "E_INTERNAL", e.what(), kDomain);
    }
    return kOk;
}

} // namespace lip::cli
