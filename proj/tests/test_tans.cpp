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

#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "ansc/tans.hpp"

using namespace ansc;

namespace {

FrequencyTable reference_table() { return FrequencyTable({3, 5, 6, 2}, 4); }

// Random table plus a random sequence over its nonzero letters.
struct Instance {
    FrequencyTable table;
    std::vector<uint32_t> seq;
};

Instance random_instance(std::mt19937_64& rng, uint32_t max_r,
                         uint32_t max_sigma, uint32_t max_len) {
    const uint32_t r = 1 + uint32_t(rng() % max_r);
    const uint32_t n = uint32_t(1) << r;
    const uint32_t sigma = 1 + uint32_t(rng() % max_sigma);
    std::vector<uint32_t> freqs(sigma, 0);
    for (uint32_t unit = 0; unit < n; ++unit)
        ++freqs[rng() % sigma];
    FrequencyTable table(std::move(freqs), r);

    std::vector<uint32_t> support;
    for (uint32_t a = 0; a < sigma; ++a)
        if (table.freq(a) > 0)
            support.push_back(a);
    const uint32_t len = uint32_t(rng() % (max_len + 1));
    std::vector<uint32_t> seq(len);
    for (auto& a : seq)
        a = support[rng() % support.size()];
    return {std::move(table), std::move(seq)};
}

} // namespace

TEST_CASE("push maps the documented example state") {
    FrequencyTable table = reference_table();
    SpreadTable spread = spread_simplified(table);
    LifoBitBuffer bits;
    // x = 16, letter 0 (f = 3): 16>>3 = 2 < 3 forces s = 2, 16>>2 = 4 lands
    // in [3..6), so 2 zero bits flush and slot shuffle[0+1] = 6 is next.
    const uint64_t next = tans_push(16, 0, table, spread, bits);
    CHECK(next == 22);
    CHECK(bits.bit_count() == 2);
    CHECK(bits.read_bits(2) == 0);
}

TEST_CASE("push through the identity layout") {
    FrequencyTable table = reference_table();
    SpreadTable spread = spread_identity(table);
    LifoBitBuffer bits;
    // x = 25, letter 2 (f = 6, cum = 8): 25>>2 = 6 is already in [6..12),
    // delta 0, low bits 01.
    const uint64_t next = tans_push(25, 2, table, spread, bits);
    CHECK(next == 24);
    CHECK(bits.bit_count() == 2);
    CHECK(bits.read_bits(2) == 1);
}

TEST_CASE("single-letter alphabet pushes are the identity") {
    FrequencyTable table({16}, 4);
    SpreadTable spread = spread_simplified(table);
    LifoBitBuffer bits;
    for (uint64_t x = 16; x < 32; ++x) {
        CHECK(tans_push(x, 0, table, spread, bits) == x);
        CHECK(bits.bit_count() == 0);
    }
}

TEST_CASE("pop inverts the documented pushes") {
    FrequencyTable table = reference_table();
    SpreadTable spread = spread_simplified(table);
    DecodeTable dec = build_decode_table(spread, table);
    LifoBitBuffer bits;
    const uint64_t next = tans_push(16, 0, table, spread, bits);
    TansPop popped = tans_pop(next, dec, bits);
    CHECK(popped.letter == 0);
    CHECK(popped.state == 16);
    CHECK(bits.bits_unread() == 0);
}

TEST_CASE("push then pop is the identity for every state and letter") {
    std::mt19937_64 rng(0x74616e73u);
    for (int iter = 0; iter < 100; ++iter) {
        Instance inst = random_instance(rng, 8, 10, 0);
        SpreadTable spread =
            iter % 2 ? spread_precise(inst.table) : spread_simplified(inst.table);
        DecodeTable dec = build_decode_table(spread, inst.table);
        const uint64_t n = inst.table.n();
        for (uint64_t x = n; x < 2 * n; ++x) {
            for (uint32_t a = 0; a < inst.table.sigma(); ++a) {
                if (inst.table.freq(a) == 0)
                    continue;
                LifoBitBuffer bits;
                const uint64_t next = tans_push(x, a, inst.table, spread, bits);
                REQUIRE(next >= n);
                REQUIRE(next < 2 * n);
                TansPop popped = tans_pop(next, dec, bits);
                REQUIRE(popped.letter == a);
                REQUIRE(popped.state == x);
                REQUIRE(bits.bits_unread() == 0);
            }
        }
    }
}

TEST_CASE("every push strictly grows the shifted state") {
    // (next << s) > x whenever f < 2^r; the sigma = 1 coder is exempt since
    // it is the identity map.
    std::mt19937_64 rng(0x67726f77u);
    for (int iter = 0; iter < 100; ++iter) {
        Instance inst = random_instance(rng, 8, 10, 0);
        if (inst.table.support() < 2)
            continue;
        SpreadTable spread = spread_simplified(inst.table);
        const uint64_t n = inst.table.n();
        for (uint64_t x = n; x < 2 * n; ++x) {
            for (uint32_t a = 0; a < inst.table.sigma(); ++a) {
                if (inst.table.freq(a) == 0)
                    continue;
                LifoBitBuffer bits;
                const uint64_t next = tans_push(x, a, inst.table, spread, bits);
                const uint64_t s = bits.bit_count();
                REQUIRE((next << s) > x);
            }
        }
    }
}

TEST_CASE("two-letter stream encodes to the documented bits") {
    FrequencyTable table = reference_table();
    SpreadTable spread = spread_simplified(table);
    const std::vector<uint32_t> seq{0, 1};
    TansEncoding enc = tans_encode(seq, table, spread);
    CHECK(enc.final_state == 16);

    LifoBitBuffer expect;
    expect.write_bits(0, 1); // letter 1 pushed first (reverse order)
    expect.write_bits(3, 3); // letter 0 pushed second
    CHECK(enc.bits == expect);

    DecodeTable dec = build_decode_table(spread, table);
    uint64_t end_state = 0;
    std::vector<uint32_t> decoded =
        tans_decode(enc.final_state, enc.bits, seq.size(), dec, &end_state);
    CHECK(decoded == seq);
    CHECK(end_state == 16);
    CHECK(enc.bits.bits_unread() == 0);
}

TEST_CASE("empty input encodes to the base state and no bits") {
    FrequencyTable table = reference_table();
    SpreadTable spread = spread_precise(table);
    TansEncoding enc = tans_encode({}, table, spread);
    CHECK(enc.final_state == 16);
    CHECK(enc.bits.bit_count() == 0);
    DecodeTable dec = build_decode_table(spread, table);
    uint64_t end_state = 0;
    CHECK(tans_decode(enc.final_state, enc.bits, 0, dec, &end_state).empty());
    CHECK(end_state == 16);
}

TEST_CASE("random streams round trip under all spreads") {
    std::mt19937_64 rng(0x72747269u);
    for (int iter = 0; iter < 400; ++iter) {
        Instance inst = random_instance(rng, 10, 12, 300);
        SpreadTable spread;
        switch (iter % 3) {
        case 0:
            spread = spread_simplified(inst.table);
            break;
        case 1:
            spread = spread_precise(inst.table);
            break;
        default:
            spread = spread_identity(inst.table);
            break;
        }
        TansEncoding enc = tans_encode(inst.seq, inst.table, spread);
        DecodeTable dec = build_decode_table(spread, inst.table);
        uint64_t end_state = 0;
        std::vector<uint32_t> decoded = tans_decode(
            enc.final_state, enc.bits, inst.seq.size(), dec, &end_state);
        REQUIRE(decoded == inst.seq);
        REQUIRE(end_state == uint64_t(1) << inst.table.r());
        REQUIRE(enc.bits.bits_unread() == 0);
    }
}

TEST_CASE("push validates state and letter") {
    FrequencyTable table = reference_table();
    SpreadTable spread = spread_simplified(table);
    LifoBitBuffer bits;
    CHECK_THROWS_AS(tans_push(15, 0, table, spread, bits), ContractError);
    CHECK_THROWS_AS(tans_push(32, 0, table, spread, bits), ContractError);
    CHECK_THROWS_AS(tans_push(16, 4, table, spread, bits), ContractError);

    FrequencyTable holey({3, 0, 13}, 4);
    SpreadTable holey_spread = spread_simplified(holey);
    CHECK_THROWS_AS(tans_push(16, 1, holey, holey_spread, bits),
                    ContractError);
}

TEST_CASE("pop validates state and detects truncated streams") {
    FrequencyTable table = reference_table();
    SpreadTable spread = spread_simplified(table);
    DecodeTable dec = build_decode_table(spread, table);
    LifoBitBuffer bits;
    CHECK_THROWS_AS(tans_pop(15, dec, bits), DecodeError);
    CHECK_THROWS_AS(tans_pop(32, dec, bits), DecodeError);

    std::vector<uint32_t> seq{2, 0, 1, 2, 3, 1};
    TansEncoding enc = tans_encode(seq, table, spread);
    // Drop the payload: refills past the first shortfall must underflow.
    LifoBitBuffer empty;
    CHECK_THROWS_AS(tans_decode(enc.final_state, empty, seq.size(), dec),
                    DecodeError);
}

TEST_CASE("encode rejects a spread of the wrong width") {
    FrequencyTable table = reference_table();
    FrequencyTable narrow({3, 5}, 3);
    SpreadTable narrow_spread = spread_simplified(narrow);
    std::vector<uint32_t> seq{0};
    CHECK_THROWS_AS(tans_encode(seq, table, narrow_spread), ContractError);
    CHECK_NOTHROW(tans_encode(seq, narrow, narrow_spread));
}