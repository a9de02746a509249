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

#include "ansc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include "ansc/adversarial.hpp"

namespace ansc {

namespace {

constexpr long double kLog2E = 1.4426950408889634074L;

long double infinity() {
    return std::numeric_limits<long double>::infinity();
}

std::string fmt(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15Lg", v);
    return buf;
}

} // namespace

long double tans_exact_redundancy_bound(uint32_t sigma, uint32_t r) {
    return (long double)sigma * kLog2E + (long double)r + 1.0L;
}

long double tans_approx_encoded_bound(long double cross_entropy_bits,
                                      uint32_t sigma, uint64_t m, uint32_t r) {
    const long double n = (long double)(uint64_t(1) << r);
    return cross_entropy_bits +
           (long double)sigma * (long double)m / n * kLog2E +
           (long double)r + 1.0L;
}

long double rans_redundancy_bound(uint32_t r, uint32_t k) {
    if (k == 0)
        return infinity();
    const long double n = (long double)(uint64_t(1) << r);
    return n * kLog2E / (long double)((uint64_t(1) << k) - 1) +
           (long double)(r + k) + 1.0L;
}

long double rans_redundancy_bound_tight(uint32_t r, uint32_t k) {
    if (k == 0)
        return infinity();
    const long double n = (long double)(uint64_t(1) << r);
    return n * kLog2E / (long double)((uint64_t(1) << k) - 1) +
           (long double)r + 1.0L;
}

bool check_tans_exact_bound(const RedundancyReport& report) {
    return report.redundancy_bits <=
           tans_exact_redundancy_bound(report.sigma, report.r) + kBoundSlack;
}

bool check_tans_approx_bound(const RedundancyReport& report) {
    return (long double)report.encoded_bits <=
           tans_approx_encoded_bound(report.cross_entropy_bits, report.sigma,
                                     report.n_letters, report.r) +
               kBoundSlack;
}

bool check_rans_bound(const RedundancyReport& report) {
    return report.redundancy_bits <=
           rans_redundancy_bound(report.r, report.k) + kBoundSlack;
}

bool check_rans_bound_tight(const RedundancyReport& report) {
    return report.redundancy_bits <=
           rans_redundancy_bound_tight(report.r, report.k) + kBoundSlack;
}

bool check_adversarial_floor(const RedundancyReport& report) {
    return report.redundancy_bits >=
           adversarial_redundancy_floor(report.sigma, report.r) - kBoundSlack;
}

RedundancyReport measure(Codec codec, uint32_t k,
                         std::span<const uint32_t> seq,
                         const FrequencyTable& table,
                         const MeasureOptions& options) {
    RedundancyReport report;
    report.codec = codec;
    report.r = table.r();
    report.k = codec == Codec::rans_fixed ? k : 0;
    report.sigma = table.sigma();
    report.n_letters = seq.size();

    std::vector<uint32_t> pushed;
    if (options.paper_push_order) {
        pushed.assign(seq.rbegin(), seq.rend());
        seq = pushed;
    }

    std::vector<uint64_t> counts = count_frequencies(seq, table.sigma());
    report.exact_frequencies =
        seq.size() == table.n() &&
        std::equal(counts.begin(), counts.end(), table.freqs().begin(),
                   [](uint64_t c, uint32_t f) { return c == f; });
    report.entropy_bits =
        seq.empty() ? 0.0L : entropy_bits(counts, seq.size());
    report.cross_entropy_bits = cross_entropy_bits(counts, table);

    EncodedStream enc = encode_stream(codec, k, seq, table);
    report.encoded_bits = enc.total_bits();
    report.redundancy_bits =
        (long double)report.encoded_bits - report.entropy_bits;

    std::vector<uint32_t> decoded =
        decode_stream(codec, k, enc.final_state, enc.bits, seq.size(), table);
    report.round_trip_ok = enc.bits.bits_unread() == 0 &&
                           std::equal(decoded.begin(), decoded.end(),
                                      seq.begin(), seq.end());

    if (codec == Codec::rans_fixed) {
        if (report.exact_frequencies && report.k >= 1) {
            report.bound_kind = BoundKind::upper;
            report.bound_bits = rans_redundancy_bound(report.r, report.k);
            report.bound_ok = check_rans_bound(report);
        } else {
            report.bound_kind = BoundKind::none;
            report.bound_bits = infinity();
            report.bound_ok = true;
        }
    } else if (report.exact_frequencies) {
        report.bound_kind = BoundKind::upper;
        report.bound_bits = tans_exact_redundancy_bound(report.sigma, report.r);
        report.bound_ok = check_tans_exact_bound(report);
    } else if (codec == Codec::tans_simplified) {
        // Bound on the absolute size restated as a redundancy bound.
        report.bound_kind = BoundKind::upper;
        report.bound_bits =
            tans_approx_encoded_bound(report.cross_entropy_bits, report.sigma,
                                      report.n_letters, report.r) -
            report.entropy_bits;
        report.bound_ok = check_tans_approx_bound(report);
    } else {
        report.bound_kind = BoundKind::none;
        report.bound_bits = infinity();
        report.bound_ok = true;
    }
    return report;
}

const char* shape_name(Shape shape) {
    switch (shape) {
    case Shape::uniform:
        return "uniform";
    case Shape::zipf:
        return "zipf";
    case Shape::spike:
        return "spike";
    }
    return "unknown";
}

std::vector<uint32_t> shaped_freqs(Shape shape, uint32_t sigma, uint32_t r) {
    const uint64_t n = uint64_t(1) << r;
    if (sigma == 0 || sigma > n)
        throw ContractError("shaped_freqs: sigma does not fit in 2^r slots");
    switch (shape) {
    case Shape::uniform: {
        std::vector<uint32_t> f(sigma, uint32_t(n / sigma));
        for (uint32_t a = 0; a < n % sigma; ++a)
            ++f[a];
        return f;
    }
    case Shape::zipf: {
        std::vector<uint64_t> raw(sigma);
        for (uint32_t a = 0; a < sigma; ++a)
            raw[a] = (uint64_t(1) << 32) / (a + 1);
        FrequencyTable t = normalize(raw, r);
        return std::vector<uint32_t>(t.freqs().begin(), t.freqs().end());
    }
    case Shape::spike: {
        std::vector<uint32_t> f(sigma, 1);
        f[0] = uint32_t(n - (sigma - 1));
        return f;
    }
    }
    throw ContractError("shaped_freqs: unknown shape");
}

void sweep(const SweepGrid& grid, std::ostream& csv) {
    csv << "codec,r,k,sigma,n,encoded_bits,entropy_bits,redundancy,bound,"
           "pass\n";
    for (Codec codec : grid.codecs) {
        const std::vector<uint32_t> one_k{0};
        const std::vector<uint32_t>& ks =
            codec == Codec::rans_fixed ? grid.ks : one_k;
        for (uint32_t k : ks)
            for (uint32_t r : grid.rs)
                for (uint32_t sigma : grid.sigmas) {
                    if (sigma > (uint64_t(1) << r))
                        continue;
                    for (Shape shape : grid.shapes)
                        for (uint32_t rep = 0; rep < grid.reps; ++rep) {
                            FrequencyTable table(shaped_freqs(shape, sigma, r),
                                                 r);
                            std::vector<uint32_t> seq;
                            seq.reserve(table.n());
                            for (uint32_t a = 0; a < sigma; ++a)
                                seq.insert(seq.end(), table.freq(a), a);
                            std::mt19937_64 rng(
                                grid.seed ^ (uint64_t(codec) << 58) ^
                                (uint64_t(k) << 52) ^ (uint64_t(r) << 44) ^
                                (uint64_t(sigma) << 20) ^
                                (uint64_t(shape) << 16) ^ rep);
                            std::shuffle(seq.begin(), seq.end(), rng);
                            RedundancyReport rep_out =
                                measure(codec, k, seq, table);
                            csv << codec_name(codec) << ',' << r << ','
                                << rep_out.k << ',' << sigma << ','
                                << rep_out.n_letters << ','
                                << rep_out.encoded_bits << ','
                                << fmt(rep_out.entropy_bits) << ','
                                << fmt(rep_out.redundancy_bits) << ','
                                << fmt(rep_out.bound_bits) << ','
                                << (rep_out.bound_ok && rep_out.round_trip_ok
                                        ? 1
                                        : 0)
                                << '\n';
                        }
                }
    }
}

void print_report(const RedundancyReport& report, std::ostream& out) {
    out << "codec: " << codec_name(report.codec) << '\n'
        << "r: " << report.r << '\n'
        << "k: " << report.k << '\n'
        << "sigma: " << report.sigma << '\n'
        << "letters: " << report.n_letters << '\n'
        << "exact_frequencies: " << (report.exact_frequencies ? "yes" : "no")
        << '\n'
        << "encoded_bits: " << report.encoded_bits << '\n'
        << "entropy_bits: " << fmt(report.entropy_bits) << '\n'
        << "cross_entropy_bits: " << fmt(report.cross_entropy_bits) << '\n'
        << "redundancy_bits: " << fmt(report.redundancy_bits) << '\n'
        << "per_letter_redundancy: "
        << fmt(report.n_letters
                   ? report.redundancy_bits / (long double)report.n_letters
                   : 0.0L)
        << '\n';
    switch (report.bound_kind) {
    case BoundKind::none:
        out << "bound: none\n";
        break;
    case BoundKind::upper:
        out << "bound_bits: " << fmt(report.bound_bits) << " (upper)\n"
            << "bound: " << (report.bound_ok ? "satisfied" : "violated")
            << '\n';
        break;
    case BoundKind::lower:
        out << "bound_bits: " << fmt(report.bound_bits) << " (lower)\n"
            << "bound: " << (report.bound_ok ? "satisfied" : "violated")
            << '\n';
        break;
    }
    out << "round_trip: " << (report.round_trip_ok ? "ok" : "FAILED") << '\n';
}

} // namespace ansc
