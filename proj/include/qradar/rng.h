// Copyright 2026 The qradar Authors
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

// SplitMix64 (Steele, Lea & Flood 2014; the seeding generator of xoshiro).
// The k-th output (k = 0, 1, ...) for seed s is mix(s + (k + 1) * gamma), so
// any position of a stream can be computed directly. Monte Carlo trial k always
// consumes output k, which makes results independent of how trials are split
// across workers.

#ifndef QRADAR_RNG_H
#define QRADAR_RNG_H

#include <cstdint>

namespace qradar {

class SplitMix64 {
   public:
    static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    /// Output number `index` of the stream seeded with `seed`.
    static uint64_t at(uint64_t seed, uint64_t index) {
        return mix(seed + (index + 1) * kGamma);
    }

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

   private:
    uint64_t state_;
};

/// Top 53 bits as a double in [0, 1).
inline double unit_interval(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Independent child seed for sub-stream `stream` of `seed`.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return SplitMix64::mix(SplitMix64::at(seed, stream) ^ 0xD1B54A32D192ED03ULL);
}

}  // namespace qradar

#endif
