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
#include <string>
#include <vector>

#include "ansc/spread.hpp"

namespace ansc {

// Worst-case input family for the table coder.  For even r >= 4 and
// n = 2^r, the alphabet has sigma = (n+2)/3 letters with frequencies
// 3,3,...,3,1.  Both queue constructions then produce the same range
// (0..sigma-1 followed by two blocks of 0..sigma-2), and the sequence below
// keeps the coder bouncing between the low and high quarters of the state
// space so that every push flushes one bit more than the letter's
// information content.
struct AdversarialInstance {
    uint32_t r = 0;
    uint32_t sigma = 0;
    FrequencyTable table;
    // Letters in push order a_1..a_n.  tans_encode pushes its input back to
    // front, so feed it the reverse of this vector.
    std::vector<uint32_t> sequence;
};

// Throws if r is odd, r < 4, or sigma = (2^r+2)/3 is not an even integer.
AdversarialInstance build_adversarial(uint32_t r);

// Redundancy floor the instance is built to exceed: (sigma-1)/4 + r - 2.
long double adversarial_redundancy_floor(uint32_t sigma, uint32_t r);

// Step-by-step check of the intended encoder trajectory on a_1..a_{n-1}:
// writing A = [0..2^{r-2}), B = [2^{r-2}..2^{r-1}), C = [2^{r-1}..2^r) for
// the low-bits value state = x - 2^r, the state must start at 0, alternate
// A -> C -> A -> ..., never touch B, and each push must emit r-2 bits from A
// and r-1 bits from C.
struct AlternationReport {
    bool ok = false;
    uint64_t steps_checked = 0;
    uint64_t first_bad_step = 0; // 1-based; 0 when ok
    std::string detail;
};

AlternationReport verify_alternation(const AdversarialInstance& instance,
                                     const SpreadTable& spread);

} // namespace ansc
