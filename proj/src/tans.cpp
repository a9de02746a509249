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

#include "ansc/tans.hpp"

#include <algorithm>

namespace ansc {

TansEncoding tans_encode(std::span<const uint32_t> seq,
                         const FrequencyTable& table,
                         const SpreadTable& spread) {
    if (spread.r != table.r() || spread.range.size() != table.n())
        throw ContractError("tans_encode: spread/table mismatch");
    TansEncoding enc;
    uint64_t x = uint64_t(1) << table.r();
    for (size_t i = seq.size(); i-- > 0;)
        x = tans_push(x, seq[i], table, spread, enc.bits);
    enc.final_state = x;
    return enc;
}

std::vector<uint32_t> tans_decode(uint64_t final_state, LifoBitBuffer& bits,
                                  uint64_t n_letters, const DecodeTable& dec,
                                  uint64_t* end_state) {
    std::vector<uint32_t> out;
    // Cap the up-front reservation: n_letters may come from an untrusted
    // header, and failed pops should reject it before memory does.
    out.reserve(size_t(std::min<uint64_t>(n_letters, uint64_t(1) << 20)));
    uint64_t x = final_state;
    for (uint64_t i = 0; i < n_letters; ++i) {
        TansPop popped = tans_pop(x, dec, bits);
        out.push_back(popped.letter);
        x = popped.state;
    }
    if (end_state)
        *end_state = x;
    return out;
}

} // namespace ansc
