// Copyright 2026 The qecnn Authors
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

#ifndef QECNN_RNG_H
#define QECNN_RNG_H

#include <cstdint>
#include <random>

namespace qecnn {

inline constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seedable, splittable generator. Stream k of seed s is an independent
/// mt19937_64 keyed by a splitmix hash of (s, k). Draws are computed from raw
/// engine output, so sequences are identical across standard libraries.
class Rng {
   public:
    explicit Rng(uint64_t seed, uint64_t stream = 0)
        : seed_(seed), stream_(stream), engine_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {
    }

    /// Independent child stream; does not advance this generator.
    Rng split(uint64_t child) const {
        return Rng(splitmix64(seed_ ^ splitmix64(stream_)), child);
    }

    uint64_t next() {
        ++draws_;
        return engine_();
    }
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p) {
        return uniform() < p;
    }
    /// Uniform integer in [0, n), n > 0.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>(uniform() * static_cast<double>(n));
    }

    uint64_t seed() const {
        return seed_;
    }
    uint64_t stream() const {
        return stream_;
    }
    /// Number of 64-bit draws taken so far.
    uint64_t position() const {
        return draws_;
    }

   private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t draws_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace qecnn

#endif
