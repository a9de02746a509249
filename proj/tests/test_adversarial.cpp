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

#include <cmath>
#include <cstdint>
#include <vector>

#include "ansc/adversarial.hpp"
#include "ansc/analysis.hpp"

using namespace ansc;

TEST_CASE("width-4 instance is frozen") {
    AdversarialInstance inst = build_adversarial(4);
    CHECK(inst.r == 4);
    CHECK(inst.sigma == 6);
    CHECK(inst.table.n() == 16);
    for (uint32_t a = 0; a + 1 < inst.sigma; ++a)
        CHECK(inst.table.freq(a) == 3);
    CHECK(inst.table.freq(inst.sigma - 1) == 1);
    CHECK(inst.sequence ==
          std::vector<uint32_t>{3, 2, 4, 0, 3, 1, 4, 0, 3, 1, 4, 0, 2, 1, 2,
                                5});
}

TEST_CASE("sequence letter counts equal the table row") {
    for (uint32_t r : {4u, 6u, 8u}) {
        AdversarialInstance inst = build_adversarial(r);
        REQUIRE(inst.sequence.size() == inst.table.n());
        std::vector<uint64_t> counts =
            count_frequencies(inst.sequence, inst.sigma);
        for (uint32_t a = 0; a < inst.sigma; ++a)
            REQUIRE(counts[a] == inst.table.freq(a));
    }
}

TEST_CASE("instance entropy matches the closed form") {
    AdversarialInstance inst = build_adversarial(4);
    std::vector<uint64_t> counts =
        count_frequencies(inst.sequence, inst.sigma);
    const long double h = entropy_bits(counts, inst.sequence.size());
    CHECK(std::abs(h - 40.2255624891826573L) < 1e-12L);
}

TEST_CASE("redundancy floor values") {
    CHECK(std::abs(adversarial_redundancy_floor(6, 4) - 3.25L) < 1e-18L);
    CHECK(std::abs(adversarial_redundancy_floor(22, 6) - 9.25L) < 1e-18L);
}

TEST_CASE("construction rejects unusable widths") {
    CHECK_THROWS_AS(build_adversarial(3), ContractError);
    CHECK_THROWS_AS(build_adversarial(5), ContractError);
    CHECK_THROWS_AS(build_adversarial(2), ContractError);
    CHECK_THROWS_AS(build_adversarial(0), ContractError);
}

TEST_CASE("state trajectory alternates between bottom and top quarters") {
    for (uint32_t r : {4u, 6u}) {
        AdversarialInstance inst = build_adversarial(r);
        for (bool half : {false, true}) {
            SpreadTable spread = half ? spread_precise(inst.table)
                                      : spread_simplified(inst.table);
            AlternationReport report = verify_alternation(inst, spread);
            CHECK(report.ok);
            CHECK(report.steps_checked == inst.table.n() - 1);
            CHECK(report.first_bad_step == 0);
        }
    }
}

TEST_CASE("a block layout breaks the trajectory") {
    AdversarialInstance inst = build_adversarial(4);
    SpreadTable identity = spread_identity(inst.table);
    AlternationReport report = verify_alternation(inst, identity);
    CHECK(!report.ok);
    CHECK(report.first_bad_step > 0);
    CHECK(!report.detail.empty());
}

TEST_CASE("measured redundancy meets the floor with bits to spare") {
    for (uint32_t r : {4u, 6u, 8u}) {
        AdversarialInstance inst = build_adversarial(r);
        MeasureOptions opts;
        opts.paper_push_order = true;
        RedundancyReport report = measure(Codec::tans_simplified, 0,
                                          inst.sequence, inst.table, opts);
        REQUIRE(report.round_trip_ok);
        REQUIRE(report.exact_frequencies);
        REQUIRE(check_adversarial_floor(report));

        // All n-1 alternating pushes pay for states pinned in the bottom
        // quarter: (n-1)(log2(3) - 3/2) + r + 1/2 exactly.
        const long double n = (long double)inst.table.n();
        const long double expect =
            (n - 1.0L) * (std::log2(3.0L) - 1.5L) + (long double)r + 0.5L;
        REQUIRE(std::abs(report.redundancy_bits - expect) < 1e-9L);
    }
}

TEST_CASE("width-4 measured redundancy is frozen") {
    AdversarialInstance inst = build_adversarial(4);
    MeasureOptions opts;
    opts.paper_push_order = true;
    RedundancyReport report =
        measure(Codec::tans_simplified, 0, inst.sequence, inst.table, opts);
    CHECK(std::abs(report.redundancy_bits - 5.77443751081734272L) < 1e-12L);
    CHECK(report.redundancy_bits >= adversarial_redundancy_floor(6, 4));
}