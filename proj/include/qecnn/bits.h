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

#ifndef QECNN_BITS_H
#define QECNN_BITS_H

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qecnn {

/// A fixed-length vector of bits packed into 64-bit words.
///
/// Bits past `size()` in the last word are always zero, so word-level
/// comparisons, hashing and popcounts never see garbage.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    size_t size() const {
        return num_bits_;
    }
    bool empty() const {
        return num_bits_ == 0;
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    /// In-place XOR. Throws std::invalid_argument on length mismatch.
    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }

    /// Parity of the bitwise AND with `other`.
    bool and_parity(const BitVector &other) const;
    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    void clear();

    /// Appends `other` after the current bits.
    void append(const BitVector &other);

    /// Indices of set bits, ascending.
    std::vector<size_t> set_indices() const;

    /// Hex encoding: character k holds bits 4k..4k+3, bit 4k as the least
    /// significant bit of the nibble. Length is ceil(size()/4).
    std::string to_hex() const;
    static BitVector from_hex(std::string_view hex, size_t num_bits);

    /// '0'/'1' characters, index 0 first.
    std::string str() const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }

    bool operator==(const BitVector &other) const = default;
    std::strong_ordering operator<=>(const BitVector &other) const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    size_t operator()(const BitVector &v) const;
};

}  // namespace qecnn

#endif
