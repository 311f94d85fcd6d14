// Copyright 2026 The majmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "majmem/decoder.hpp"

#include <gtest/gtest.h>

#include <bit>

#include "majmem/storage.hpp"

using namespace majmem;

namespace {

constexpr std::complex<double> kI(0, 1);

// Site set as a bitmask; bit j is site j.
bool mask_satisfies(uint64_t mask, const std::vector<uint8_t> &bits) {
    for (size_t j = 0; j < bits.size(); j++) {
        int count = static_cast<int>(((mask >> j) & 1) + ((mask >> (j + 1)) & 1));
        if (count % 2 != bits[j]) {
            return false;
        }
    }
    return true;
}

uint64_t to_mask(const Correction &c) {
    uint64_t m = 0;
    for (size_t s : c.sites) {
        m |= uint64_t{1} << s;
    }
    return m;
}

}  // namespace

TEST(decode, trivial_syndrome) {
    EXPECT_TRUE(decode(std::vector<uint8_t>(5, 0), 6).sites.empty());
}

TEST(decode, single_defect) {
    Correction c = decode(std::vector<uint8_t>{1, 0, 0}, 4);
    EXPECT_EQ(c.sites, (std::vector<size_t>{0}));
}

TEST(decode, tie_prefers_first_site) {
    Correction c = decode(std::vector<uint8_t>{0, 1, 0}, 4);
    EXPECT_EQ(c.sites, (std::vector<size_t>{0, 1}));
}

TEST(decode, brute_force_equivalence_up_to_twelve) {
    for (size_t n = 2; n <= 12; n++) {
        const uint64_t subsets = uint64_t{1} << n;
        for (uint64_t code = 0; code < (uint64_t{1} << (n - 1)); code++) {
            std::vector<uint8_t> bits = syndrome_bits(code, n);
            std::vector<uint64_t> solutions;
            for (uint64_t mask = 0; mask < subsets; mask++) {
                if (mask_satisfies(mask, bits)) {
                    solutions.push_back(mask);
                }
            }
            ASSERT_EQ(solutions.size(), 2u);
            ASSERT_EQ(solutions[0] ^ solutions[1], subsets - 1);
            Correction c = decode(bits, n);
            uint64_t m = to_mask(c);
            ASSERT_TRUE(m == solutions[0] || m == solutions[1]);
            ASSERT_TRUE(satisfies_syndrome(c, bits, n));
            uint64_t other = m ^ (subsets - 1);
            int w = std::popcount(m);
            int wo = std::popcount(other);
            ASSERT_LE(w, wo);
            ASSERT_LE(c.weight(), (n + 1) / 2);
            if (w == wo) {
                ASSERT_TRUE(m & 1) << "tie must keep site 0";
            }
            ASSERT_TRUE(std::is_sorted(c.sites.begin(), c.sites.end()));
        }
    }
}

TEST(satisfies_syndrome, rejects_wrong_sets) {
    Correction c;
    c.sites = {1};
    EXPECT_TRUE(satisfies_syndrome(c, {1, 1, 0}, 4));
    EXPECT_FALSE(satisfies_syndrome(c, {1, 0, 0}, 4));
}

TEST(correction_operator_forms, patterns) {
    EXPECT_TRUE(correction_operator_forms(Correction{}, 4).empty());

    Correction one;
    one.sites = {1};
    auto f = correction_operator_forms(one, 3);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], majorana_form(6, 2, -kI));
    EXPECT_EQ(f[1], majorana_form(6, 3));

    Correction two;
    two.sites = {0, 2};
    f = correction_operator_forms(two, 3);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f[0], majorana_form(6, 0, -kI));
    EXPECT_EQ(f[1], majorana_form(6, 1));
    EXPECT_EQ(f[2], majorana_form(6, 4, -kI));
    EXPECT_EQ(f[3], majorana_form(6, 5));
}
