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

#include "ansc/analysis.hpp"
#include "ansc/codec.hpp"

namespace ansc {

// Self-contained encoded stream, little-endian throughout:
//
//   offset  size       field
//   0       4          magic "ANSC"
//   4       1          format version (1)
//   5       1          codec id (Codec enum value)
//   6       1          r
//   7       1          k (0 for the table codecs)
//   8       4          sigma
//   12      8          n_letters
//   20      4*sigma    frequencies (sum to 2^r)
//   ...     8          final_state
//   ...     8          payload_bit_count
//   ...     ceil(payload_bit_count/8)  payload
//
// Letters are byte values, so sigma <= 256 for the file front end.

inline constexpr uint8_t kContainerVersion = 1;

struct ContainerInfo {
    Codec codec = Codec::tans_simplified;
    uint32_t r = 0;
    uint32_t k = 0;
    uint32_t sigma = 0;
    uint64_t n_letters = 0;
    std::vector<uint32_t> freqs;
    uint64_t final_state = 0;
    uint64_t payload_bits = 0;
};

std::vector<uint8_t> serialize_container(const ContainerInfo& info,
                                         const LifoBitBuffer& payload);

struct ParsedContainer {
    ContainerInfo info;
    LifoBitBuffer payload;
};

// Validates every header field and the payload length; each malformed field
// raises a ContainerError naming that field.
ParsedContainer parse_container(std::span<const uint8_t> bytes);

// File front end: bytes are letters.  `r` of 0 picks the smallest width
// whose 2^r covers the number of distinct byte values (at least 1).
// Frequencies are scaled with normalize(), so the stream also round-trips
// when byte counts are not a power of two.
std::vector<uint8_t> encode_file_bytes(std::span<const uint8_t> data,
                                       Codec codec, uint32_t k,
                                       uint32_t r = 0);

std::vector<uint8_t> decode_file_bytes(std::span<const uint8_t> container);

// Decode path split out for reporting: parse + decode + integrity checks
// (state returns to its initial value, payload fully consumed).
std::vector<uint32_t> decode_letters(const ParsedContainer& parsed);

} // namespace ansc
