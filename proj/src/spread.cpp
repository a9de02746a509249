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

#include "ansc/spread.hpp"

#include <queue>

namespace ansc {

namespace {

// Queue entry for letter `letter` awaiting its (cnt+1)-th placement.  The
// priority key is (num/2) * n / f, an exact rational; num = 2*cnt for the
// zero-seeded variant and 2*cnt+1 for the half-seeded one.  n cancels in
// comparisons, so keys are compared as num/f by cross-multiplication.
struct Pending {
    uint64_t num;
    uint32_t cnt;
    uint32_t f;
    uint32_t letter;
};

// Strict weak order: true when `a` must be popped after `b`.  Primary key is
// the rational num/f.  Equal keys are broken toward the smaller placed
// fraction cnt/f, then toward the smaller letter.  With zero-seeded keys the
// fraction tie-break never discriminates (equal keys imply equal fractions),
// so ties there fall through to the letter index; with half-seeded keys it
// resolves equal keys toward the rarer letter, which keeps the construction
// aligned with the zero-seeded one on its worst-case inputs.
struct PopsAfter {
    bool operator()(const Pending& a, const Pending& b) const {
        const uint64_t ka = a.num * b.f;
        const uint64_t kb = b.num * a.f;
        if (ka != kb)
            return ka > kb;
        const uint64_t fa = uint64_t(a.cnt) * b.f;
        const uint64_t fb = uint64_t(b.cnt) * a.f;
        if (fa != fb)
            return fa > fb;
        return a.letter > b.letter;
    }
};

SpreadTable spread_with_queue(const FrequencyTable& table, bool half_seeded) {
    const uint32_t n = table.n();
    const uint32_t sigma = table.sigma();
    SpreadTable out;
    out.r = table.r();
    out.range.resize(n);
    out.shuffle.resize(n);

    std::priority_queue<Pending, std::vector<Pending>, PopsAfter> queue;
    for (uint32_t a = 0; a < sigma; ++a)
        if (table.freq(a) > 0)
            queue.push({half_seeded ? 1u : 0u, 0, table.freq(a), a});

    for (uint32_t slot = 0; slot < n; ++slot) {
        Pending e = queue.top();
        queue.pop();
        out.range[slot] = e.letter;
        out.shuffle[table.cum(e.letter) + e.cnt] = slot;
        if (e.cnt + 1 < e.f)
            queue.push({e.num + 2, e.cnt + 1, e.f, e.letter});
    }
    return out;
}

} // namespace

SpreadTable spread_simplified(const FrequencyTable& table) {
    return spread_with_queue(table, false);
}

SpreadTable spread_precise(const FrequencyTable& table) {
    return spread_with_queue(table, true);
}

SpreadTable spread_identity(const FrequencyTable& table) {
    const uint32_t n = table.n();
    SpreadTable out;
    out.r = table.r();
    out.range.resize(n);
    out.shuffle.resize(n);
    for (uint32_t a = 0; a < table.sigma(); ++a)
        for (uint32_t slot = table.cum(a); slot < table.cum(a + 1); ++slot)
            out.range[slot] = a;
    for (uint32_t slot = 0; slot < n; ++slot)
        out.shuffle[slot] = slot;
    return out;
}

SpreadTable spread_from_range(const FrequencyTable& table,
                              std::span<const uint32_t> range) {
    const uint32_t n = table.n();
    if (range.size() != n)
        throw ContractError("spread_from_range: range size is not 2^r");
    SpreadTable out;
    out.r = table.r();
    out.range.assign(range.begin(), range.end());
    out.shuffle.resize(n);
    std::vector<uint32_t> seen(table.sigma(), 0);
    for (uint32_t slot = 0; slot < n; ++slot) {
        const uint32_t a = range[slot];
        if (a >= table.sigma())
            throw ContractError("spread_from_range: letter out of alphabet");
        if (seen[a] >= table.freq(a))
            throw ContractError(
                "spread_from_range: letter occupies more slots than its frequency");
        out.shuffle[table.cum(a) + seen[a]] = slot;
        ++seen[a];
    }
    // Totals match 2^r, so no letter can be under-assigned either.
    return out;
}

DecodeTable build_decode_table(const SpreadTable& spread,
                               const FrequencyTable& table) {
    const uint32_t n = table.n();
    if (spread.r != table.r() || spread.range.size() != n)
        throw ContractError("build_decode_table: spread/table mismatch");
    DecodeTable out;
    out.r = spread.r;
    out.letter = spread.range;
    out.restored_x.resize(n);
    std::vector<uint32_t> seen(table.sigma(), 0);
    for (uint32_t slot = 0; slot < n; ++slot) {
        const uint32_t a = spread.range[slot];
        if (a >= table.sigma())
            throw ContractError("build_decode_table: letter out of alphabet");
        out.restored_x[slot] = table.freq(a) + seen[a];
        ++seen[a];
    }
    return out;
}

} // namespace ansc
