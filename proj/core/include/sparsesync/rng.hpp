// SPDX-License-Identifier: Apache-2.0
//
// sparsesync: sparsity-aware joint frame synchronization and channel estimation
// Copyright (C) 2026 the sparsesync authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SPARSESYNC_RNG_HPP
#define SPARSESYNC_RNG_HPP

#include "sparsesync/types.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace sparsesync {

// splitmix64 step; also used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic seed for a tagged sub-stream (training symbols, noise,
// per-trial streams, ...). Same (base, tag) always yields the same seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t s = base ^ (tag * 0xd1b54a32d192ed03ULL);
    return splitmix64(s);
}

// xoshiro256++ by Blackman & Vigna; platform-independent output stream.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        for (auto& word : state_)
            word = splitmix64(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0,1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in (0,1]; safe as a log() argument.
    double uniform01_open() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

    // Top `bits` bits of the next word, as a uniform integer in [0, 2^bits).
    std::uint32_t top_bits(unsigned bits) { return static_cast<std::uint32_t>(next() >> (64 - bits)); }

    // Circularly-symmetric complex Gaussian with E|z|^2 = 1.
    cplx standard_complex_normal() {
        const double radius = std::sqrt(-std::log(uniform01_open()));
        const double phase = 2.0 * M_PI * uniform01();
        return {radius * std::cos(phase), radius * std::sin(phase)};
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> state_;
};

// Tags for the deterministic sub-streams of one Monte-Carlo trial.
namespace seed_tag {
inline constexpr std::uint64_t kTraining = 0x54524e47ULL;  // training frame symbols
inline constexpr std::uint64_t kNoise = 0x4e4f4953ULL;     // channel noise
inline constexpr std::uint64_t kBoundary = 0x424f554eULL;  // random frame boundary draw
inline constexpr std::uint64_t kData = 0x44415441'0000ULL; // + frame index
} // namespace seed_tag

} // namespace sparsesync

#endif
