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
#include "ansc/model.hpp"

namespace ansc {

// Range coder over states x in [2^{r+k}..2^{r+k+1}) that needs no spread
// table.  The quotient floor(x~/f_a) of every push is confined to
// [2^k..2^{k+1}), so division reduces to k+1 conditional subtractions.
// Stream size accounting mirrors the table coder: bit_count() + (r+k+1).
struct RansParams {
    uint32_t r = 0;
    uint32_t k = 0;

    uint32_t state_log2() const { return r + k; } // states span 2^{r+k}..2^{r+k+1}
};

// Throws unless r in [1..kMaxTableLog2], k in [0..8].
void validate(const RansParams& params);

struct RansEncoding {
    uint64_t final_state = 0;
    LifoBitBuffer bits;
};

struct RansPop {
    uint64_t state = 0;
    uint32_t letter = 0;
};

struct RansDiv {
    uint64_t quotient = 0;
    uint64_t remainder = 0;
};

// Quotient and remainder of x/f for x in [f*2^k..f*2^{k+1}), computed with
// one unconditional and k conditional subtractions (no data-dependent
// branches, no divide instruction).
inline RansDiv restricted_divide(uint64_t x, uint32_t f, uint32_t k) {
    if (f == 0)
        throw ContractError("restricted_divide: zero divisor");
    const uint64_t fk = uint64_t(f) << k;
    if (x < fk || x >= (fk << 1))
        throw ContractError("restricted_divide: x outside [f*2^k..f*2^(k+1))");
    x -= fk;
    uint64_t q = uint64_t(1) << k;
    for (uint32_t i = k; i-- > 0;) {
        const uint64_t fi = uint64_t(f) << i;
        const uint64_t ge = uint64_t(x >= fi);
        x -= fi & (uint64_t(0) - ge);
        q |= ge << i;
    }
    return {q, x};
}

// Width of the shift that brings x>>s into [f*2^k..f*2^{k+1}), branch-free:
// with t = r - floor(log2 f) and d = (t << (R+1)) - (f << (t+k)), the sum
// x + d carries t or t-1 into the bits above R, which is exactly s.  The
// full-range letter f = 2^r (t = 0) is its own case: every state already
// lies in [f*2^k..f*2^{k+1}), so s = 0.
inline unsigned rans_shift_amount(uint64_t x, uint32_t f,
                                  const RansParams& params) {
    const uint32_t R = params.state_log2();
    if (f == (uint32_t(1) << params.r))
        return 0;
    const uint32_t t = params.r - unsigned(std::bit_width(f) - 1);
    const uint64_t d =
        (uint64_t(t) << (R + 1)) - (uint64_t(f) << (t + params.k));
    return unsigned((x + d) >> (R + 1));
}

inline uint64_t rans_push(uint64_t x, uint32_t a, const FrequencyTable& table,
                          const RansParams& params, LifoBitBuffer& out) {
    const uint64_t lo = uint64_t(1) << params.state_log2();
    if (x < lo || x >= 2 * lo)
        throw ContractError("rans_push: state out of range");
    if (a >= table.sigma() || table.freq(a) == 0)
        throw ContractError("rans_push: letter has zero frequency");
    const uint32_t f = table.freq(a);
    const unsigned s = rans_shift_amount(x, f, params);
    out.write_bits(x & ((uint64_t(1) << s) - 1), s);
    const RansDiv div = restricted_divide(x >> s, f, params.k);
    return (div.quotient << params.r) + table.cum(a) + div.remainder;
}

inline RansPop rans_pop(uint64_t x, const FrequencyTable& table,
                        const RansParams& params, LifoBitBuffer& in) {
    const uint32_t R = params.state_log2();
    const uint64_t lo = uint64_t(1) << R;
    if (x < lo || x >= 2 * lo)
        throw DecodeError("rans_pop: state out of range");
    const uint32_t slot = uint32_t(x & (table.n() - 1));
    const uint32_t a = table.letter_at(slot);
    const uint64_t mid =
        (x >> params.r) * table.freq(a) + slot - table.cum(a);
    const unsigned s = R + 1 - unsigned(std::bit_width(mid));
    return {(mid << s) | in.read_bits(s), a};
}

RansEncoding rans_encode(std::span<const uint32_t> seq,
                         const FrequencyTable& table,
                         const RansParams& params);

// Pops n_letters letters starting from final_state.  A complete unwind ends
// at state 2^{r+k}; pass end_state to observe where this one actually landed.
std::vector<uint32_t> rans_decode(uint64_t final_state, LifoBitBuffer& bits,
                                  uint64_t n_letters,
                                  const FrequencyTable& table,
                                  const RansParams& params,
                                  uint64_t* end_state = nullptr);

} // namespace ansc
