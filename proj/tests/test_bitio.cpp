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
#include <utility>
#include <vector>

#include "ansc/bitio.hpp"
#include "ansc/errors.hpp"

using ansc::LifoBitBuffer;

TEST_CASE("bit layout is lsb first within bytes in write order") {
    LifoBitBuffer buf;
    // Writing 0b101 then 0b11 packs as bits 1,0,1 then 1,1: byte 0b00011101.
    buf.write_bits(0b101, 3);
    buf.write_bits(0b11, 2);
    CHECK(buf.bit_count() == 5);
    const std::vector<uint8_t> bytes = buf.to_bytes();
    REQUIRE(bytes.size() == 1);
    CHECK(bytes[0] == 0x1D);
}

TEST_CASE("groups read back last written first") {
    LifoBitBuffer buf;
    buf.write_bits(0b101, 3);
    buf.write_bits(0b0110, 4);
    buf.write_bits(0, 0); // zero-width groups are legal no-ops
    buf.write_bits(1, 1);
    CHECK(buf.bits_unread() == 8);
    CHECK(buf.read_bits(1) == 1);
    CHECK(buf.read_bits(0) == 0);
    CHECK(buf.read_bits(4) == 0b0110);
    CHECK(buf.read_bits(3) == 0b101);
    CHECK(buf.bits_unread() == 0);
}

TEST_CASE("width 64 round trips extreme values") {
    LifoBitBuffer buf;
    buf.write_bits(~uint64_t(0), 64);
    buf.write_bits(0, 64);
    buf.write_bits(uint64_t(1) << 63, 64);
    CHECK(buf.read_bits(64) == uint64_t(1) << 63);
    CHECK(buf.read_bits(64) == 0);
    CHECK(buf.read_bits(64) == ~uint64_t(0));
}

TEST_CASE("write rejects bad width or oversized value") {
    LifoBitBuffer buf;
    CHECK_THROWS_AS(buf.write_bits(0, 65), ansc::ContractError);
    CHECK_THROWS_AS(buf.write_bits(0b100, 2), ansc::ContractError);
    CHECK_NOTHROW(buf.write_bits(0b11, 2));
}

TEST_CASE("reading past the start underflows") {
    LifoBitBuffer buf;
    buf.write_bits(0b11, 2);
    CHECK(buf.read_bits(2) == 0b11);
    CHECK_THROWS_AS(buf.read_bits(1), ansc::DecodeError);
    CHECK_THROWS_AS(LifoBitBuffer{}.read_bits(1), ansc::DecodeError);
}

TEST_CASE("reset_read replays the whole buffer") {
    LifoBitBuffer buf;
    buf.write_bits(0b10, 2);
    buf.write_bits(0b1, 1);
    CHECK(buf.read_bits(1) == 1);
    CHECK(buf.read_bits(2) == 0b10);
    buf.reset_read();
    CHECK(buf.bits_unread() == 3);
    CHECK(buf.read_bits(1) == 1);
}

TEST_CASE("byte serialization preserves content and pads with zeros") {
    LifoBitBuffer buf;
    buf.write_bits(0x2B, 6);
    buf.write_bits(0x3, 5);
    const std::vector<uint8_t> bytes = buf.to_bytes();
    REQUIRE(bytes.size() == 2);
    CHECK((bytes[1] >> 3) == 0); // pad bits beyond bit 10 stay zero
    LifoBitBuffer back = LifoBitBuffer::from_bytes(bytes, buf.bit_count());
    CHECK(back == buf);
    CHECK(back.read_bits(5) == 0x3);
    CHECK(back.read_bits(6) == 0x2B);
}

TEST_CASE("from_bytes masks nonzero padding") {
    std::vector<uint8_t> bytes{0xFF};
    LifoBitBuffer buf = LifoBitBuffer::from_bytes(bytes, 3);
    CHECK(buf.to_bytes() == std::vector<uint8_t>{0x07});
}

TEST_CASE("from_bytes rejects inconsistent bit counts") {
    std::vector<uint8_t> bytes{0xFF, 0x01};
    CHECK_THROWS_AS(LifoBitBuffer::from_bytes(bytes, 17), ansc::ContractError);
    CHECK_NOTHROW(LifoBitBuffer::from_bytes(bytes, 9));
}

TEST_CASE("random group lists round trip") {
    std::mt19937_64 rng(0x62697469u);
    std::uniform_int_distribution<uint32_t> width_dist(0, 64);
    for (int iter = 0; iter < 10000; ++iter) {
        LifoBitBuffer buf;
        std::vector<std::pair<uint64_t, uint32_t>> groups;
        const uint32_t count = uint32_t(rng() % 16);
        for (uint32_t i = 0; i < count; ++i) {
            const uint32_t width = width_dist(rng);
            const uint64_t mask =
                width == 64 ? ~uint64_t(0) : ((uint64_t(1) << width) - 1);
            const uint64_t value = rng() & mask;
            groups.emplace_back(value, width);
            buf.write_bits(value, width);
        }
        LifoBitBuffer back =
            LifoBitBuffer::from_bytes(buf.to_bytes(), buf.bit_count());
        REQUIRE(back == buf);
        for (auto it = groups.rbegin(); it != groups.rend(); ++it)
            REQUIRE(back.read_bits(it->second) == it->first);
        REQUIRE(back.bits_unread() == 0);
    }
}
