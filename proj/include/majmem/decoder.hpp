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

#ifndef MAJMEM_DECODER_HPP
#define MAJMEM_DECODER_HPP

#include <cstdint>
#include <vector>

#include "majmem/gaussian.hpp"

namespace majmem {

/// Sites (zero-based, ascending) carrying the elementary error
/// E_j = (-i) c_{2j} c_{2j+1} in zero-based Majorana indices.
struct Correction {
    std::vector<size_t> sites;

    size_t weight() const {
        return sites.size();
    }
};

/// Minimum-weight correction for the repetition code seen through
/// Jordan-Wigner. The two solutions of the parity constraints are the
/// prefix-parity set and its complement; the lighter one wins. On a tie the
/// set containing site 0 wins, which is also the lexicographically smaller one.
Correction decode(const std::vector<uint8_t> &bits, size_t n);
Correction decode(const Syndrome &s, size_t n);

/// True when |T intersect {j, j+1}| = bits[j] mod 2 for every j.
bool satisfies_syndrome(const Correction &c, const std::vector<uint8_t> &bits, size_t n);

/// (-i) c_{2j}, c_{2j+1} for each site in ascending order, as length-2N forms.
std::vector<MajoranaForm> correction_operator_forms(const Correction &c, size_t n);

}  // namespace majmem

#endif
