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

#include "ftlab/hamming.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftlab {

Word7 word_from_string(const std::string& s) {
    if (s.size() != 7) {
        throw std::invalid_argument("7-bit word expected, got \"" + s + "\"");
    }
    Word7 w = 0;
    for (int i = 0; i < 7; i++) {
        if (s[i] == '1') {
            w |= Word7(1 << i);
        } else if (s[i] != '0') {
            throw std::invalid_argument("7-bit word must be binary: \"" + s + "\"");
        }
    }
    return w;
}

std::string word_to_string(Word7 w) {
    std::string s(7, '0');
    for (int i = 0; i < 7; i++) {
        if ((w >> i) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

HammingCode::HammingCode() {
    rows_ = {word_from_string("1111000"), word_from_string("1100110"),
             word_from_string("1010101")};
    generator_ = {rows_[0], rows_[1], rows_[2], word_from_string("1111111")};

    // Span the generator rows to enumerate all 16 codewords.
    for (int bits = 0; bits < 16; bits++) {
        Word7 w = 0;
        for (int g = 0; g < 4; g++) {
            if ((bits >> g) & 1) {
                w ^= generator_[g];
            }
        }
        codewords_.push_back(w);
        (word_weight(w) % 2 == 0 ? even_ : odd_).push_back(w);
    }
    std::sort(codewords_.begin(), codewords_.end());
    std::sort(even_.begin(), even_.end());
    std::sort(odd_.begin(), odd_.end());

    decode_table_.fill(0);
    for (int pos = 1; pos <= 7; pos++) {
        uint8_t s = syndrome(Word7(1 << (pos - 1)));
        if (s == 0 || decode_table_[s] != 0) {
            throw std::logic_error("Hamming parity-check columns must be distinct and nonzero");
        }
        decode_table_[s] = pos;
    }
}

uint8_t HammingCode::syndrome(Word7 w) const {
    uint8_t s = 0;
    for (int r = 0; r < 3; r++) {
        s |= uint8_t((word_weight(w & rows_[r]) & 1) << r);
    }
    return s;
}

HammingCode::Correction HammingCode::correct(Word7 w) const {
    uint8_t s = syndrome(w);
    if (s == 0) {
        return {w, 0};
    }
    int pos = decode_table_[s];
    return {Word7(w ^ (1 << (pos - 1))), pos};
}

int HammingCode::codeword_parity(Word7 w) const {
    if (syndrome(w) != 0) {
        throw std::invalid_argument("codeword_parity requires a zero-syndrome word: " +
                                    word_to_string(w));
    }
    return word_weight(w) % 2;
}

const HammingCode& hamming() {
    static const HammingCode code;
    return code;
}

}  // namespace ftlab
