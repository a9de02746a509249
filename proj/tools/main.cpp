/*
Copyright 2026 the ansc authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Command-line front end: encode/decode files, print redundancy reports,
// run the adversarial construction, and sweep the benchmark grid.
// Exit codes: 0 success, 1 usage error, 2 malformed data or failed check.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ansc/adversarial.hpp"
#include "ansc/analysis.hpp"
#include "ansc/container.hpp"

namespace {

constexpr uint32_t kCliMaxR = 22; // table memory stays form-factor sane

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ansc::Error("cannot open input file: " + path);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    if (in.bad())
        throw ansc::Error("read failed: " + path);
    return data;
}

void write_file(const std::string& path, const std::vector<uint8_t>& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ansc::Error("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              std::streamsize(data.size()));
    if (!out)
        throw ansc::Error("write failed: " + path);
}

ansc::Codec parse_codec(const std::string& name) {
    auto codec = ansc::codec_from_name(name);
    if (!codec)
        throw CLI::ValidationError(
            "--codec", "expected tans-simplified, tans-precise, or rans");
    return *codec;
}

// Grid strings look like "r=4,8;sigma=2,256;codec=rans;k=1,2;dist=zipf;
// reps=2;seed=7".  Omitted keys keep their defaults; an empty value list
// empties that axis (yielding a header-only CSV).
ansc::SweepGrid parse_grid(const std::string& text) {
    ansc::SweepGrid grid;
    if (text.empty())
        return grid;
    std::stringstream ss(text);
    std::string clause;
    while (std::getline(ss, clause, ';')) {
        auto eq = clause.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--grid",
                                       "clause missing '=': " + clause);
        const std::string key = clause.substr(0, eq);
        std::vector<std::string> values;
        std::stringstream vs(clause.substr(eq + 1));
        std::string v;
        while (std::getline(vs, v, ','))
            if (!v.empty())
                values.push_back(v);

        auto as_u32 = [&](const std::string& s) {
            size_t used = 0;
            unsigned long parsed = std::stoul(s, &used);
            if (used != s.size())
                throw CLI::ValidationError("--grid", "bad number: " + s);
            return uint32_t(parsed);
        };
        if (key == "r") {
            grid.rs.clear();
            for (auto& s : values)
                grid.rs.push_back(as_u32(s));
        } else if (key == "sigma") {
            grid.sigmas.clear();
            for (auto& s : values)
                grid.sigmas.push_back(as_u32(s));
        } else if (key == "k") {
            grid.ks.clear();
            for (auto& s : values)
                grid.ks.push_back(as_u32(s));
        } else if (key == "codec") {
            grid.codecs.clear();
            for (auto& s : values)
                grid.codecs.push_back(parse_codec(s));
        } else if (key == "dist") {
            grid.shapes.clear();
            for (auto& s : values) {
                if (s == "uniform")
                    grid.shapes.push_back(ansc::Shape::uniform);
                else if (s == "zipf")
                    grid.shapes.push_back(ansc::Shape::zipf);
                else if (s == "spike")
                    grid.shapes.push_back(ansc::Shape::spike);
                else
                    throw CLI::ValidationError("--grid",
                                               "unknown dist: " + s);
            }
        } else if (key == "reps") {
            grid.reps = values.empty() ? 0 : as_u32(values[0]);
        } else if (key == "seed") {
            grid.seed = values.empty() ? 0 : std::stoull(values[0]);
        } else {
            throw CLI::ValidationError("--grid", "unknown key: " + key);
        }
    }
    return grid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tabled/range ANS coder with redundancy measurement"};
    app.require_subcommand(1);

    std::string codec_name = "tans-simplified";
    uint32_t k = 0;
    uint32_t r = 0;
    std::string input, output;

    auto add_codec_opts = [&](CLI::App* cmd) {
        cmd->add_option("--codec", codec_name,
                        "tans-simplified, tans-precise, or rans")
            ->capture_default_str();
        cmd->add_option("--k", k, "rans quotient width, 0..8")
            ->check(CLI::Range(0u, 8u))
            ->capture_default_str();
        cmd->add_option("--r", r,
                        "table width; 0 picks the smallest that fits the "
                        "distinct byte count")
            ->check(CLI::Range(0u, kCliMaxR));
    };

    CLI::App* enc = app.add_subcommand("encode", "compress a file");
    add_codec_opts(enc);
    enc->add_option("--input", input, "file to compress")->required();
    enc->add_option("--output", output, "container to write")->required();

    CLI::App* dec = app.add_subcommand("decode", "expand a container");
    dec->add_option("--input", input, "container to read")->required();
    dec->add_option("--output", output, "file to write")->required();

    CLI::App* stats =
        app.add_subcommand("stats", "print a redundancy report for a file");
    add_codec_opts(stats);
    stats->add_option("--input", input, "file to analyze")->required();

    CLI::App* adv = app.add_subcommand(
        "adversarial", "build the worst-case instance and measure it");
    uint32_t adv_r = 0;
    bool adv_verify = false;
    adv->add_option("--r", adv_r, "even table width >= 4")
        ->required()
        ->check(CLI::Range(4u, kCliMaxR));
    adv->add_flag("--verify", adv_verify,
                  "also check the step-by-step state trajectory");

    CLI::App* bench =
        app.add_subcommand("bench", "emit the redundancy sweep CSV");
    std::string grid_text;
    std::string bench_out;
    bench->add_option("--grid", grid_text,
                      "axes, e.g. r=4,8;sigma=2,256;codec=rans;k=1,2;"
                      "dist=zipf;reps=2;seed=7");
    bench->add_option("--output", bench_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (*enc) {
            ansc::Codec codec = parse_codec(codec_name);
            if (codec != ansc::Codec::rans_fixed && k != 0)
                throw CLI::ValidationError("--k",
                                           "only meaningful with --codec rans");
            write_file(output,
                       ansc::encode_file_bytes(read_file(input), codec, k, r));
        } else if (*dec) {
            write_file(output, ansc::decode_file_bytes(read_file(input)));
        } else if (*stats) {
            ansc::Codec codec = parse_codec(codec_name);
            if (codec != ansc::Codec::rans_fixed && k != 0)
                throw CLI::ValidationError("--k",
                                           "only meaningful with --codec rans");
            std::vector<uint8_t> data = read_file(input);
            std::vector<uint32_t> letters(data.begin(), data.end());
            uint32_t sigma = 1;
            for (uint8_t b : data)
                sigma = std::max<uint32_t>(sigma, uint32_t(b) + 1);
            std::vector<uint64_t> raw =
                ansc::count_frequencies(letters, sigma);
            uint64_t distinct = 0;
            for (uint64_t c : raw)
                if (c > 0)
                    ++distinct;
            uint32_t use_r = r;
            if (use_r == 0) {
                use_r = 1;
                while ((uint64_t(1) << use_r) < distinct)
                    ++use_r;
            }
            ansc::FrequencyTable table =
                data.empty()
                    ? ansc::FrequencyTable({uint32_t(1) << use_r}, use_r)
                    : ansc::normalize(raw, use_r);
            ansc::RedundancyReport report =
                ansc::measure(codec, k, letters, table);
            ansc::print_report(report, std::cout);
            if (!report.round_trip_ok || !report.bound_ok)
                return 2;
        } else if (*adv) {
            ansc::AdversarialInstance inst = ansc::build_adversarial(adv_r);
            std::cout << "r: " << inst.r << '\n'
                      << "sigma: " << inst.sigma << '\n'
                      << "n: " << inst.table.n() << '\n';
            std::cout << "sequence:";
            for (uint32_t a : inst.sequence)
                std::cout << ' ' << a;
            std::cout << '\n';

            bool ok = true;
            if (adv_verify) {
                ansc::SpreadTable simp = spread_simplified(inst.table);
                ansc::SpreadTable prec = spread_precise(inst.table);
                const bool same = simp.range == prec.range;
                std::cout << "spreads_agree: " << (same ? "yes" : "NO")
                          << '\n';
                ansc::AlternationReport alt =
                    ansc::verify_alternation(inst, simp);
                std::cout << "alternation: "
                          << (alt.ok ? "ok" : "FAILED at step " +
                                                  std::to_string(
                                                      alt.first_bad_step) +
                                                  " (" + alt.detail + ")")
                          << '\n';
                ok = ok && same && alt.ok;
            }

            ansc::MeasureOptions opts;
            opts.paper_push_order = true;
            ansc::RedundancyReport report =
                ansc::measure(ansc::Codec::tans_simplified, 0, inst.sequence,
                              inst.table, opts);
            const long double floor =
                ansc::adversarial_redundancy_floor(inst.sigma, inst.r);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.15Lg", report.redundancy_bits);
            std::cout << "encoded_bits: " << report.encoded_bits << '\n'
                      << "redundancy_bits: " << buf << '\n';
            std::snprintf(buf, sizeof(buf), "%.15Lg", floor);
            std::cout << "lower_bound_bits: " << buf << '\n';
            ok = ok && report.round_trip_ok &&
                 ansc::check_adversarial_floor(report);
            std::cout << (ok ? "PASS" : "FAIL") << '\n';
            if (!ok)
                return 2;
        } else if (*bench) {
            ansc::SweepGrid grid = parse_grid(grid_text);
            if (bench_out.empty()) {
                ansc::sweep(grid, std::cout);
            } else {
                std::ofstream out(bench_out, std::ios::trunc);
                if (!out)
                    throw ansc::Error("cannot open output file: " + bench_out);
                ansc::sweep(grid, out);
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ansc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
