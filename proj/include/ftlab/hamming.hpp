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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ftlab {

/// A 7-bit word. Position p (1..7, left-to-right in string form) is stored
/// at bit p-1, so "1111000" == 0b0001111.
using Word7 = uint8_t;

Word7 word_from_string(const std::string& s);
std::string word_to_string(Word7 w);

inline int word_weight(Word7 w) { return __builtin_popcount(w & 0x7F); }

/// The classical [7,4] Hamming code used throughout: parity checks,
/// single-error syndrome decoding, and the even/odd codeword split.
///
/// The parity-check rows are fixed to 1111000, 1100110, 1010101 — the three
/// generators of the even-weight subcode — so the code kernel is exactly the
/// 8 even plus 8 odd codewords the encoded basis states are built from.
class HammingCode {
  public:
    HammingCode();

    const std::array<Word7, 3>& parity_check() const { return rows_; }
    const std::array<Word7, 4>& generator() const { return generator_; }

    /// All 16 codewords, even-weight first (8 even, then 8 odd).
    const std::vector<Word7>& codewords() const { return codewords_; }
    const std::vector<Word7>& even_codewords() const { return even_; }
    const std::vector<Word7>& odd_codewords() const { return odd_; }

    /// 3-bit syndrome; bit i is the parity of the word against row i.
    uint8_t syndrome(Word7 w) const;

    /// Position 1..7 a syndrome decodes to, or 0 for the zero syndrome.
    int syndrome_position(uint8_t syndrome) const { return decode_table_[syndrome & 7]; }

    struct Correction {
        Word7 corrected;
        int flipped_position;  // 1..7, or 0 when no correction was needed
    };

    /// Flips the single position the syndrome identifies (if any). Weight-2
    /// corruptions land on the wrong codeword — inherent to distance 3.
    Correction correct(Word7 w) const;

    bool is_codeword(Word7 w) const { return syndrome(w) == 0; }

    /// Weight mod 2 of a codeword: 0 for the even family, 1 for the odd.
    /// Throws if the word is not a codeword (correct it first).
    int codeword_parity(Word7 w) const;

  private:
    std::array<Word7, 3> rows_;
    std::array<Word7, 4> generator_;
    std::array<int, 8> decode_table_;
    std::vector<Word7> codewords_, even_, odd_;
};

/// Shared instance; the code is stateless after construction.
const HammingCode& hamming();

}  // namespace ftlab
