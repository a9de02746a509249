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
#include <span>
#include <vector>

#include "ansc/errors.hpp"

namespace ansc {

// Tables larger than 2^30 slots are rejected outright.
inline constexpr uint32_t kMaxTableLog2 = 30;

// Letter frequencies summing to exactly 2^r, plus cumulative sums.
// Letters are indices into [0..sigma); zero frequencies are allowed and mark
// letters that never occur.
class FrequencyTable {
public:
    FrequencyTable(std::vector<uint32_t> freqs, uint32_t r);

    uint32_t r() const { return r_; }
    uint32_t n() const { return uint32_t(1) << r_; }
    uint32_t sigma() const { return uint32_t(freq_.size()); }
    uint32_t freq(uint32_t a) const { return freq_[a]; }
    uint32_t cum(uint32_t a) const { return cum_[a]; }
    std::span<const uint32_t> freqs() const { return freq_; }

    // Number of letters with nonzero frequency.
    uint32_t support() const { return support_; }

    // The letter a with cum(a) <= slot < cum(a+1); slot in [0..n).
    uint32_t letter_at(uint32_t slot) const;

    bool operator==(const FrequencyTable& other) const {
        return r_ == other.r_ && freq_ == other.freq_;
    }

private:
    uint32_t r_;
    uint32_t support_;
    std::vector<uint32_t> freq_;
    std::vector<uint32_t> cum_; // sigma+1 entries, cum_[sigma] == 2^r
};

// Occurrence counts of each letter of [0..sigma) in `seq`.
std::vector<uint64_t> count_frequencies(std::span<const uint32_t> seq,
                                        uint32_t sigma);

// Builds a table from counts that already sum to exactly 2^r.
FrequencyTable make_table(std::span<const uint64_t> counts, uint32_t r);

// Scales raw counts (any positive total) to frequencies summing to 2^r.
// Largest-remainder apportionment: start from max(1, floor(raw*2^r/m)) for
// every nonzero letter, then repair the sum one unit at a time in exact
// residue order (see model.cpp).  Nonzero letters never drop below 1; zero
// letters stay zero.  Deterministic, ties resolved toward smaller indices.
FrequencyTable normalize(std::span<const uint64_t> raw, uint32_t r);

// Shannon information content of `counts` in bits against the empirical
// distribution counts/total: sum of counts[a]*log2(total/counts[a]).
// Zero counts contribute zero.  Requires total == sum(counts) > 0.
long double entropy_bits(std::span<const uint64_t> counts, uint64_t total);

// Ideal code length of `counts` under the table's scaled frequencies:
// sum of counts[a]*log2(2^r/table.freq(a)).  Every letter that occurs must
// have a nonzero table frequency.
long double cross_entropy_bits(std::span<const uint64_t> counts,
                               const FrequencyTable& table);

} // namespace ansc
