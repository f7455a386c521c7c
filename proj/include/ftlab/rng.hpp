// Copyright 2026 The ftlab authors
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

#pragma once

#include <cstdint>

namespace ftlab {

/// xoshiro256** generator with counter-based stream derivation.
///
/// Shot i of a run draws from Rng::for_shot(master_seed, i), so results are
/// reproducible for any worker count and scheduling order. Conversions to
/// doubles are done by hand so output is identical across standard libraries.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        // SplitMix64 expansion of the seed into the xoshiro state.
        uint64_t x = seed;
        for (auto& s : state_) {
            s = splitmix64(x);
        }
    }

    /// Independent per-shot stream: the shot index is mixed into the seed
    /// before state expansion.
    static Rng for_shot(uint64_t master_seed, uint64_t shot_index) {
        return Rng(splitmix64_mix(master_seed ^ (0x9E3779B97F4A7C15ULL * (shot_index + 1))));
    }

    using result_type = uint64_t;
    static constexpr uint64_t min() { return 0; }
    static constexpr uint64_t max() { return ~uint64_t{0}; }

    uint64_t operator()() { return next(); }

    uint64_t next() {
        uint64_t result = rotl(state_[1] * 5, 7) * 9;
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    bool coin() { return next() >> 63; }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        uint64_t threshold = (~n + 1) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) {
                return r % n;
            }
        }
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static uint64_t splitmix64(uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(x);
    }

    static uint64_t splitmix64_mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t state_[4];
};

}  // namespace ftlab
