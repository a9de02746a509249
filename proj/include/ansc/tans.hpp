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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "ansc/bitio.hpp"
#include "ansc/spread.hpp"

namespace ansc {

// Table-based coder over states x in [2^r..2^{r+1}).  The encoder consumes
// letters back to front so the decoder can emit them front to back; both
// start/end at state 2^r.  A stream's total size is bit_count() + (r+1):
// payload plus the final state spelled out with its top bit.

struct TansEncoding {
    uint64_t final_state = 0;
    LifoBitBuffer bits;
};

struct TansPop {
    uint64_t state = 0;
    uint32_t letter = 0;
};

// Folds letter `a` into state x: shifts out the s low bits of x that make
// x>>s land in [f_a..2f_a), then maps that value through the spread table.
inline uint64_t tans_push(uint64_t x, uint32_t a, const FrequencyTable& table,
                          const SpreadTable& spread, LifoBitBuffer& out) {
    const uint32_t r = table.r();
    const uint64_t n = uint64_t(1) << r;
    if (x < n || x >= 2 * n)
        throw ContractError("tans_push: state out of range");
    if (a >= table.sigma() || table.freq(a) == 0)
        throw ContractError("tans_push: letter has zero frequency");
    const uint32_t f = table.freq(a);
    unsigned s = r + 1 - unsigned(std::bit_width(f));
    if ((x >> s) < f)
        --s;
    const uint64_t delta = (x >> s) - f;
    out.write_bits(x & ((uint64_t(1) << s) - 1), s);
    return n + spread.shuffle[table.cum(a) + delta];
}

// Inverse of tans_push: the slot names the letter and the pre-shift value;
// the refill width is whatever brings the state back to r+1 bits.
inline TansPop tans_pop(uint64_t x, const DecodeTable& dec,
                        LifoBitBuffer& in) {
    const uint32_t r = dec.r;
    const uint64_t n = uint64_t(1) << r;
    if (x < n || x >= 2 * n)
        throw DecodeError("tans_pop: state out of range");
    const uint32_t slot = uint32_t(x - n);
    const uint64_t restored = dec.restored_x[slot];
    const unsigned s = r + 1 - unsigned(std::bit_width(restored));
    const uint64_t bits = in.read_bits(s);
    return {(restored << s) | bits, dec.letter[slot]};
}

TansEncoding tans_encode(std::span<const uint32_t> seq,
                         const FrequencyTable& table,
                         const SpreadTable& spread);

// Pops n_letters letters starting from final_state.  A complete unwind ends
// at state 2^r; pass end_state to observe where this one actually landed.
std::vector<uint32_t> tans_decode(uint64_t final_state, LifoBitBuffer& bits,
                                  uint64_t n_letters, const DecodeTable& dec,
                                  uint64_t* end_state = nullptr);

} // namespace ansc
