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

#include "qecnn/bits.h"

#include <stdexcept>

namespace qecnn {

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument(
            "BitVector length mismatch: " + std::to_string(num_bits_) + " vs " + std::to_string(other.num_bits_));
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

bool BitVector::and_parity(const BitVector &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument(
            "BitVector length mismatch: " + std::to_string(num_bits_) + " vs " + std::to_string(other.num_bits_));
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

void BitVector::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

void BitVector::append(const BitVector &other) {
    size_t offset = num_bits_;
    num_bits_ += other.num_bits_;
    words_.resize((num_bits_ + 63) / 64, 0);
    if ((offset & 63) == 0) {
        for (size_t w = 0; w < other.words_.size(); w++) {
            words_[(offset >> 6) + w] = other.words_[w];
        }
        return;
    }
    for (size_t k = 0; k < other.num_bits_; k++) {
        if (other.get(k)) {
            set(offset + k, true);
        }
    }
}

std::vector<size_t> BitVector::set_indices() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve((num_bits_ + 3) / 4);
    for (size_t k = 0; k < num_bits_; k += 4) {
        unsigned nibble = (words_[k >> 6] >> (k & 63)) & 0xF;
        out.push_back(digits[nibble]);
    }
    return out;
}

BitVector BitVector::from_hex(std::string_view hex, size_t num_bits) {
    if (hex.size() != (num_bits + 3) / 4) {
        throw std::invalid_argument(
            "hex key '" + std::string(hex) + "' has wrong length for " + std::to_string(num_bits) + " bits");
    }
    BitVector out(num_bits);
    for (size_t c = 0; c < hex.size(); c++) {
        char ch = hex[c];
        unsigned nibble;
        if (ch >= '0' && ch <= '9') {
            nibble = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            nibble = ch - 'a' + 10;
        } else if (ch >= 'A' && ch <= 'F') {
            nibble = ch - 'A' + 10;
        } else {
            throw std::invalid_argument("invalid hex character in key '" + std::string(hex) + "'");
        }
        for (size_t b = 0; b < 4; b++) {
            if ((nibble >> b) & 1) {
                size_t k = 4 * c + b;
                if (k >= num_bits) {
                    throw std::invalid_argument("hex key '" + std::string(hex) + "' sets bits past its length");
                }
                out.set(k, true);
            }
        }
    }
    return out;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

std::strong_ordering BitVector::operator<=>(const BitVector &other) const {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    return words_ <=> other.words_;
}

size_t BitVectorHash::operator()(const BitVector &v) const {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ v.size();
    for (uint64_t w : v.words()) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<size_t>(h ^ (h >> 31));
}

}  // namespace qecnn
