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

#include "ansc/model.hpp"

namespace ansc {

// Assignment of table slots [0..2^r) to letters.
//
// range[slot] is the letter owning that slot.  shuffle[cum(a)+j] is the slot
// holding the (j+1)-th occurrence of letter a; occurrences are numbered in
// slot order, so shuffle is strictly increasing within each letter and is a
// permutation of [0..2^r) overall.
struct SpreadTable {
    uint32_t r = 0;
    std::vector<uint32_t> range;
    std::vector<uint32_t> shuffle;

    bool operator==(const SpreadTable&) const = default;
};

// Priority-queue construction, zero-seeded keys: every nonzero letter enters
// with key 0 and is re-inserted with key cnt*n/f_a after each placement.
SpreadTable spread_simplified(const FrequencyTable& table);

// Same queue, half-seeded keys (cnt + 1/2)*n/f_a.
SpreadTable spread_precise(const FrequencyTable& table);

// Contiguous blocks: range[cum(a)..cum(a+1)) = a, shuffle = identity.
SpreadTable spread_identity(const FrequencyTable& table);

// Wraps an externally chosen range; validates per-letter slot counts.
SpreadTable spread_from_range(const FrequencyTable& table,
                              std::span<const uint32_t> range);

// Slot-indexed decoding view of a spread table.
// letter[slot] == range[slot]; restored_x[slot] == f_a + j for the slot
// holding the (j+1)-th occurrence of a.
struct DecodeTable {
    uint32_t r = 0;
    std::vector<uint32_t> letter;
    std::vector<uint32_t> restored_x;
};

DecodeTable build_decode_table(const SpreadTable& spread,
                               const FrequencyTable& table);

} // namespace ansc
