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

#include "ansc/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ansc {

FrequencyTable::FrequencyTable(std::vector<uint32_t> freqs, uint32_t r)
    : r_(r), freq_(std::move(freqs)) {
    if (r < 1 || r > kMaxTableLog2)
        throw ContractError("FrequencyTable: r out of range");
    if (freq_.empty())
        throw ContractError("FrequencyTable: empty alphabet");
    const uint64_t n = uint64_t(1) << r;
    uint64_t sum = 0;
    support_ = 0;
    cum_.resize(freq_.size() + 1);
    cum_[0] = 0;
    for (size_t a = 0; a < freq_.size(); ++a) {
        sum += freq_[a];
        if (sum > n)
            throw ContractError("FrequencyTable: frequencies exceed 2^r");
        if (freq_[a] > 0)
            ++support_;
        cum_[a + 1] = uint32_t(sum);
    }
    if (sum != n)
        throw ContractError("FrequencyTable: frequencies do not sum to 2^r");
}

uint32_t FrequencyTable::letter_at(uint32_t slot) const {
    if (slot >= n())
        throw ContractError("letter_at: slot out of range");
    auto it = std::upper_bound(cum_.begin() + 1, cum_.end(), slot);
    return uint32_t(it - (cum_.begin() + 1));
}

std::vector<uint64_t> count_frequencies(std::span<const uint32_t> seq,
                                        uint32_t sigma) {
    if (sigma == 0)
        throw ContractError("count_frequencies: empty alphabet");
    std::vector<uint64_t> counts(sigma, 0);
    for (uint32_t a : seq) {
        if (a >= sigma)
            throw ContractError("count_frequencies: letter out of alphabet");
        ++counts[a];
    }
    return counts;
}

FrequencyTable make_table(std::span<const uint64_t> counts, uint32_t r) {
    std::vector<uint32_t> freqs(counts.size());
    for (size_t a = 0; a < counts.size(); ++a) {
        if (counts[a] > (uint64_t(1) << kMaxTableLog2))
            throw ContractError("make_table: count too large");
        freqs[a] = uint32_t(counts[a]);
    }
    return FrequencyTable(std::move(freqs), r);
}

FrequencyTable normalize(std::span<const uint64_t> raw, uint32_t r) {
    if (r < 1 || r > kMaxTableLog2)
        throw ContractError("normalize: r out of range");
    if (raw.empty())
        throw ContractError("normalize: empty alphabet");
    const uint64_t n = uint64_t(1) << r;
    uint64_t m = 0;
    uint64_t nonzero = 0;
    for (uint64_t c : raw) {
        m += c;
        if (c > 0)
            ++nonzero;
    }
    if (m == 0)
        throw ContractError("normalize: all counts are zero");
    if (nonzero > n)
        throw ContractError("normalize: more distinct letters than 2^r slots");

    const size_t sigma = raw.size();
    std::vector<uint32_t> f(sigma, 0);
    // Signed deficit raw[a]*n - f[a]*m, in units of 1/m of a slot.  Positive
    // means letter a holds less than its exact share.  For letters clamped up
    // to 1 the deficit is negative, which keeps them out of the increment
    // pass below.
    std::vector<__int128> deficit(sigma, 0);
    uint64_t assigned = 0;
    for (size_t a = 0; a < sigma; ++a) {
        if (raw[a] == 0)
            continue;
        unsigned __int128 exact = (unsigned __int128)raw[a] * n;
        uint64_t fl = uint64_t(exact / m);
        f[a] = uint32_t(std::max<uint64_t>(1, fl));
        deficit[a] = __int128(exact) - __int128(f[a]) * m;
        assigned += f[a];
    }

    std::vector<uint32_t> order;
    order.reserve(nonzero);
    for (size_t a = 0; a < sigma; ++a)
        if (raw[a] > 0)
            order.push_back(uint32_t(a));

    if (assigned < n) {
        // Grant one extra slot to the letters furthest below their share.
        // The shortfall is less than the number of nonzero letters, so a
        // single pass suffices.
        std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            if (deficit[a] != deficit[b])
                return deficit[a] > deficit[b];
            return a < b;
        });
        uint64_t need = n - assigned;
        for (uint32_t a : order) {
            if (need == 0)
                break;
            ++f[a];
            --need;
        }
    } else if (assigned > n) {
        // Excess comes only from clamping, so it can always be recovered from
        // letters above 1.  Take from the most over-granted letters first and
        // sweep again if one pass is not enough.
        std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            if (deficit[a] != deficit[b])
                return deficit[a] < deficit[b];
            return a < b;
        });
        uint64_t excess = assigned - n;
        while (excess > 0) {
            for (uint32_t a : order) {
                if (excess == 0)
                    break;
                if (f[a] > 1) {
                    --f[a];
                    --excess;
                }
            }
        }
    }
    return FrequencyTable(std::move(f), r);
}

long double entropy_bits(std::span<const uint64_t> counts, uint64_t total) {
    uint64_t sum = 0;
    for (uint64_t c : counts)
        sum += c;
    if (total == 0 || sum != total)
        throw ContractError("entropy_bits: counts do not sum to total");
    long double bits = 0.0L;
    for (uint64_t c : counts)
        if (c > 0)
            bits += (long double)c *
                    log2l((long double)total / (long double)c);
    return bits;
}

long double cross_entropy_bits(std::span<const uint64_t> counts,
                               const FrequencyTable& table) {
    if (counts.size() != table.sigma())
        throw ContractError("cross_entropy_bits: alphabet size mismatch");
    const long double n = (long double)table.n();
    long double bits = 0.0L;
    for (size_t a = 0; a < counts.size(); ++a) {
        if (counts[a] == 0)
            continue;
        if (table.freq(uint32_t(a)) == 0)
            throw ContractError(
                "cross_entropy_bits: letter occurs but has zero frequency");
        bits += (long double)counts[a] *
                log2l(n / (long double)table.freq(uint32_t(a)));
    }
    return bits;
}

} // namespace ansc
