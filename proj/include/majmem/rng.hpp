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

#ifndef MAJMEM_RNG_HPP
#define MAJMEM_RNG_HPP

#include <cstdint>

namespace majmem {

/// SplitMix64 finalizer. Bijective on 64 bit words.
constexpr uint64_t mix64(uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr double u64_to_unit(uint64_t x) noexcept {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Counter-based stream. The output of draw k depends only on (key, k), so a
/// stream can be recreated anywhere from its key. Child streams are derived by
/// hashing an index into the key, which gives order-independent randomness for
/// parallel work: sample i of realization r always sees the same numbers no
/// matter which worker runs it.
class Rng {
   public:
    constexpr explicit Rng(uint64_t seed = 0) noexcept : key_(mix64(seed ^ 0x6A09E667F3BCC909ULL)) {
    }

    constexpr Rng substream(uint64_t index) const noexcept {
        Rng r;
        r.key_ = mix64(key_ ^ mix64(index + 0xA4093822299F31D0ULL));
        return r;
    }

    constexpr uint64_t next() noexcept {
        return mix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_);
    }

    /// Uniform on [0, 1).
    constexpr double uniform() noexcept {
        return u64_to_unit(next());
    }

    /// Random access draw that does not advance the stream.
    constexpr double uniform_at(uint64_t k) const noexcept {
        return u64_to_unit(mix64(key_ + 0x9E3779B97F4A7C15ULL * (k + 1)));
    }

    constexpr uint64_t key() const noexcept {
        return key_;
    }

   private:
    uint64_t key_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace majmem

#endif
