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

#include <string>

#include "majmem/errors.hpp"

using namespace majmem;

Correction majmem::decode(const std::vector<uint8_t> &bits, size_t n) {
    if (bits.size() + 1 != n) {
        throw ConfigError("decode: syndrome length " + std::to_string(bits.size()) + " does not match N - 1");
    }
    // Site j is flipped iff an odd number of walls lie to its left.
    std::vector<uint8_t> in_prefix(n, 0);
    size_t weight = 0;
    uint8_t parity = 0;
    for (size_t j = 1; j < n; j++) {
        parity ^= bits[j - 1] & 1;
        in_prefix[j] = parity;
        weight += parity;
    }
    // The complement always holds site 0, so it also wins ties.
    bool take_complement = 2 * weight >= n;
    Correction c;
    c.sites.reserve(take_complement ? n - weight : weight);
    for (size_t j = 0; j < n; j++) {
        if (static_cast<bool>(in_prefix[j]) != take_complement) {
            c.sites.push_back(j);
        }
    }
    return c;
}

Correction majmem::decode(const Syndrome &s, size_t n) {
    return decode(s.bits, n);
}

bool majmem::satisfies_syndrome(const Correction &c, const std::vector<uint8_t> &bits, size_t n) {
    if (bits.size() + 1 != n) {
        return false;
    }
    std::vector<uint8_t> mark(n, 0);
    for (size_t j : c.sites) {
        if (j >= n) {
            return false;
        }
        mark[j] ^= 1;
    }
    for (size_t j = 0; j + 1 < n; j++) {
        if (((mark[j] + mark[j + 1]) & 1) != (bits[j] & 1)) {
            return false;
        }
    }
    return true;
}

std::vector<MajoranaForm> majmem::correction_operator_forms(const Correction &c, size_t n) {
    std::vector<MajoranaForm> forms;
    forms.reserve(2 * c.sites.size());
    for (size_t j : c.sites) {
        forms.push_back(majorana_form(2 * n, 2 * j, std::complex<double>(0, -1)));
        forms.push_back(majorana_form(2 * n, 2 * j + 1));
    }
    return forms;
}
