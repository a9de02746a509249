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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ansc/codec.hpp"

namespace ansc {

// Slack allowed in floating-point redundancy comparisons.
inline constexpr long double kBoundSlack = 1e-9L;

enum class BoundKind : uint8_t {
    none,  // no proven bound applies; bound_bits is +inf
    upper, // redundancy must stay at or below bound_bits
    lower, // redundancy must stay at or above bound_bits
};

// Everything measured from encoding one sequence with one codec.
// Redundancy compares the stream against the sequence's own empirical
// entropy; bound_bits carries the tightest bound this library can prove for
// the codec/instance combination (see measure() below).
struct RedundancyReport {
    Codec codec = Codec::tans_simplified;
    uint32_t r = 0;
    uint32_t k = 0;
    uint32_t sigma = 0;
    uint64_t n_letters = 0;
    uint64_t encoded_bits = 0;
    long double entropy_bits = 0.0L;       // against counts/n_letters
    long double cross_entropy_bits = 0.0L; // against table frequencies/2^r
    long double redundancy_bits = 0.0L;    // encoded - entropy
    long double bound_bits = 0.0L;
    BoundKind bound_kind = BoundKind::none;
    bool bound_ok = false;
    bool round_trip_ok = false;
    bool exact_frequencies = false; // counts equal the table row for row
};

struct MeasureOptions {
    // Push a_1..a_n in sequence order instead of the encoder's usual
    // back-to-front consumption (the adversarial trajectory needs this).
    bool paper_push_order = false;
};

// Encodes, decodes, and sizes `seq` under `codec`, verifying the round trip
// and attaching the applicable redundancy bound:
//   - table coder on exact frequencies: sigma*log2(e) + r + 1 (upper)
//   - zero-seeded table coder on approximate frequencies: the cross-entropy
//     overhead form below (upper)
//   - range coder with k >= 1 on exact frequencies: 2^r*log2(e)/(2^k-1)
//     + r + k + 1 (upper)
//   - anything else: none
RedundancyReport measure(Codec codec, uint32_t k,
                         std::span<const uint32_t> seq,
                         const FrequencyTable& table,
                         const MeasureOptions& options = {});

// Bound formulas, exposed for tests and reporting.
long double tans_exact_redundancy_bound(uint32_t sigma, uint32_t r);
long double tans_approx_encoded_bound(long double cross_entropy_bits,
                                      uint32_t sigma, uint64_t m, uint32_t r);
long double rans_redundancy_bound(uint32_t r, uint32_t k);       // +r+k+1 form
long double rans_redundancy_bound_tight(uint32_t r, uint32_t k); // +r+1 form

// Bound checks with kBoundSlack applied; each recomputes its bound from the
// report fields rather than trusting bound_bits.
bool check_tans_exact_bound(const RedundancyReport& report);
bool check_tans_approx_bound(const RedundancyReport& report);
bool check_rans_bound(const RedundancyReport& report);
bool check_rans_bound_tight(const RedundancyReport& report);
bool check_adversarial_floor(const RedundancyReport& report);

// Deterministic benchmark sweep.  Every cell is one CSV row:
// codec,r,k,sigma,n,encoded_bits,entropy_bits,redundancy,bound,pass
// Cells whose sigma cannot fit in 2^r slots are skipped.
enum class Shape : uint8_t { uniform, zipf, spike };

const char* shape_name(Shape shape);

struct SweepGrid {
    std::vector<uint32_t> rs{4, 8, 12};
    std::vector<uint32_t> sigmas{2, 16, 256};
    std::vector<Codec> codecs{Codec::tans_simplified, Codec::tans_precise,
                              Codec::rans_fixed};
    std::vector<uint32_t> ks{0, 1, 2, 3, 4}; // rans only
    std::vector<Shape> shapes{Shape::uniform, Shape::zipf, Shape::spike};
    uint32_t reps = 3;
    uint64_t seed = 0x414e5343; // "ANSC"
};

// Frequencies of the given shape summing to 2^r over sigma letters, all
// nonzero; requires sigma <= 2^r.
std::vector<uint32_t> shaped_freqs(Shape shape, uint32_t sigma, uint32_t r);

void sweep(const SweepGrid& grid, std::ostream& csv);

void print_report(const RedundancyReport& report, std::ostream& out);

} // namespace ansc
