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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftlab {

/// Fixed-length bit vector packed into 64-bit words.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t n_bits) : n_(n_bits), words_((n_bits + 63) / 64, 0) {}

    /// Parses a '0'/'1' string; character i becomes bit i.
    static BitVec from_string(const std::string& s) {
        BitVec v(s.size());
        for (size_t i = 0; i < s.size(); i++) {
            if (s[i] == '1') {
                v.set(i, true);
            } else if (s[i] != '0') {
                throw std::invalid_argument("BitVec string must contain only '0'/'1': " + s);
            }
        }
        return v;
    }

    size_t size() const { return n_; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(size_t i, bool value) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void toggle(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void xor_with(const BitVec& other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
    }

    size_t popcount() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += std::popcount(w);
        }
        return total;
    }

    /// popcount(this AND other).
    size_t overlap(const BitVec& other) const {
        size_t total = 0;
        for (size_t w = 0; w < words_.size(); w++) {
            total += std::popcount(words_[w] & other.words_[w]);
        }
        return total;
    }

    /// popcount(this OR other).
    size_t union_count(const BitVec& other) const {
        size_t total = 0;
        for (size_t w = 0; w < words_.size(); w++) {
            total += std::popcount(words_[w] | other.words_[w]);
        }
        return total;
    }

    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    std::string str() const {
        std::string s(n_, '0');
        for (size_t i = 0; i < n_; i++) {
            if (get(i)) {
                s[i] = '1';
            }
        }
        return s;
    }

    bool operator==(const BitVec& other) const = default;

    const std::vector<uint64_t>& words() const { return words_; }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace ftlab
