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

#include "ansc/adversarial.hpp"

#include "ansc/tans.hpp"

namespace ansc {

AdversarialInstance build_adversarial(uint32_t r) {
    if (r < 4 || (r & 1) != 0)
        throw ContractError("build_adversarial: r must be even and >= 4");
    if (r > kMaxTableLog2)
        throw ContractError("build_adversarial: r out of range");
    const uint32_t n = uint32_t(1) << r;
    if ((n + 2) % 3 != 0)
        throw ContractError("build_adversarial: 2^r + 2 not divisible by 3");
    const uint32_t sigma = (n + 2) / 3;
    if (sigma % 2 != 0)
        throw ContractError("build_adversarial: sigma is not even");

    std::vector<uint32_t> freqs(sigma, 3);
    freqs[sigma - 1] = 1;

    // Positions are 1-based here.  Odd positions draw from the upper letter
    // band [sigma/2-1..sigma-1), even positions from the lower band
    // [0..sigma/2); the bands overlap in the single letter sigma/2-1, which
    // fills the leftover slots: last two odd positions, first even position.
    // Position n holds the unique frequency-1 letter.
    const uint32_t shared = sigma / 2 - 1;
    std::vector<uint32_t> odd_letters;
    odd_letters.reserve(n / 2);
    for (int pass = 0; pass < 3; ++pass)
        for (uint32_t a = sigma / 2; a + 1 < sigma; ++a)
            odd_letters.push_back(a);
    odd_letters.push_back(shared);
    odd_letters.push_back(shared);

    std::vector<uint32_t> even_letters;
    even_letters.reserve(n / 2 - 1);
    even_letters.push_back(shared);
    for (int pass = 0; pass < 3; ++pass)
        for (uint32_t a = 0; a + 1 < sigma / 2; ++a)
            even_letters.push_back(a);

    AdversarialInstance inst{r, sigma, FrequencyTable(std::move(freqs), r), {}};
    inst.sequence.resize(n);
    size_t odd_next = 0, even_next = 0;
    for (uint32_t pos = 1; pos < n; ++pos)
        inst.sequence[pos - 1] = (pos & 1) ? odd_letters[odd_next++]
                                           : even_letters[even_next++];
    inst.sequence[n - 1] = sigma - 1;
    return inst;
}

long double adversarial_redundancy_floor(uint32_t sigma, uint32_t r) {
    return (long double)(sigma - 1) / 4.0L + (long double)r - 2.0L;
}

AlternationReport verify_alternation(const AdversarialInstance& instance,
                                     const SpreadTable& spread) {
    const uint32_t r = instance.r;
    const uint64_t n = uint64_t(1) << r;
    const uint64_t quarter = n >> 2;
    if (spread.r != r || spread.range.size() != n)
        throw ContractError("verify_alternation: spread/instance mismatch");
    AlternationReport report;

    LifoBitBuffer bits;
    uint64_t x = n; // state 0
    for (uint64_t step = 1; step < n; ++step) {
        const uint64_t before = bits.bit_count();
        x = tans_push(x, instance.sequence[step - 1], instance.table, spread,
                      bits);
        const uint64_t width = bits.bit_count() - before;
        const uint64_t state = x - n;
        const bool expect_high = (step & 1) != 0; // odd steps land in C
        const uint64_t expect_width = expect_high ? r - 2 : r - 1;
        if (width != expect_width) {
            report.first_bad_step = step;
            report.detail = "push emitted " + std::to_string(width) +
                            " bits, expected " + std::to_string(expect_width);
            return report;
        }
        if (state >= quarter && state < 2 * quarter) {
            report.first_bad_step = step;
            report.detail = "state entered the forbidden middle quarter";
            return report;
        }
        const bool in_high = state >= 2 * quarter;
        if (in_high != expect_high) {
            report.first_bad_step = step;
            report.detail = expect_high ? "state failed to reach the top half"
                                        : "state failed to return to the "
                                          "bottom quarter";
            return report;
        }
        ++report.steps_checked;
    }
    report.ok = true;
    return report;
}

} // namespace ansc
