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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ansc/rans.hpp"
#include "ansc/tans.hpp"

namespace ansc {

// The three stream flavors.  Values double as the container codec id.
enum class Codec : uint8_t {
    tans_simplified = 0, // table coder, zero-seeded queue spread
    tans_precise = 1,    // table coder, half-seeded queue spread
    rans_fixed = 2,      // table-free range coder, quotient width k
};

const char* codec_name(Codec codec);
std::optional<Codec> codec_from_name(std::string_view name);

struct EncodedStream {
    uint64_t final_state = 0;
    LifoBitBuffer bits;
    uint32_t state_bits = 0; // r+1 for the table coder, r+k+1 for the range coder

    uint64_t total_bits() const { return bits.bit_count() + state_bits; }
};

// One-call encode/decode across all codecs.  The table codecs demand k == 0
// and rebuild their spread table from `table` on every call.
EncodedStream encode_stream(Codec codec, uint32_t k,
                            std::span<const uint32_t> seq,
                            const FrequencyTable& table);

std::vector<uint32_t> decode_stream(Codec codec, uint32_t k,
                                    uint64_t final_state, LifoBitBuffer& bits,
                                    uint64_t n_letters,
                                    const FrequencyTable& table,
                                    uint64_t* end_state = nullptr);

// Lowest state of the codec's range: what an encoder starts from and a fully
// unwound decoder must come back to.
uint64_t initial_state(Codec codec, uint32_t k, uint32_t r);

} // namespace ansc
