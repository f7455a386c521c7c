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

#include "ftlab/pauli.hpp"

#include <stdexcept>

namespace ftlab {

PauliOperator PauliOperator::from_string(const std::string& word) {
    size_t i = 0;
    int phase = 0;
    if (i < word.size() && (word[i] == '+' || word[i] == '-')) {
        if (word[i] == '-') {
            phase = 2;
        }
        i++;
    }
    if (i < word.size() && word[i] == 'i') {
        phase += 1;
        i++;
    }
    std::string letters = word.substr(i);
    PauliOperator p(letters.size());
    for (size_t q = 0; q < letters.size(); q++) {
        switch (letters[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x_.set(q, true);
                break;
            case 'Y':
                p.x_.set(q, true);
                p.z_.set(q, true);
                phase += 1;  // Y = iXZ
                break;
            case 'Z':
                p.z_.set(q, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli letter in: " + word);
        }
    }
    p.set_phase(phase);
    return p;
}

PauliOperator PauliOperator::single(size_t n, size_t qubit, char kind) {
    if (qubit >= n) {
        throw std::invalid_argument("Pauli qubit index out of range");
    }
    PauliOperator p(n);
    switch (kind) {
        case 'X':
            p.x_.set(qubit, true);
            break;
        case 'Y':
            p.x_.set(qubit, true);
            p.z_.set(qubit, true);
            p.phase_ = 1;
            break;
        case 'Z':
            p.z_.set(qubit, true);
            break;
        case 'I':
            break;
        default:
            throw std::invalid_argument("bad Pauli kind");
    }
    return p;
}

PauliOperator PauliOperator::operator*(const PauliOperator& rhs) const {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("Pauli product: operator sizes differ");
    }
    PauliOperator out(n_);
    // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}.
    size_t anti = z_.overlap(rhs.x_);
    out.x_ = x_;
    out.x_.xor_with(rhs.x_);
    out.z_ = z_;
    out.z_.xor_with(rhs.z_);
    out.set_phase(phase_ + rhs.phase_ + 2 * static_cast<int>(anti & 1));
    return out;
}

PauliOperator PauliOperator::inverse() const {
    // (i^p X^x Z^z)^-1 = i^{-p} Z^z X^x = i^{-p} (-1)^{|x&z|} X^x Z^z.
    PauliOperator out = *this;
    out.set_phase(-phase_ + 2 * static_cast<int>(x_.overlap(z_) & 1));
    return out;
}

std::string PauliOperator::str() const {
    int display_phase = phase_;
    std::string letters(n_, 'I');
    for (size_t q = 0; q < n_; q++) {
        bool x = x_.get(q), z = z_.get(q);
        if (x && z) {
            letters[q] = 'Y';
            display_phase -= 1;  // pull the i out of each Y = iXZ
        } else if (x) {
            letters[q] = 'X';
        } else if (z) {
            letters[q] = 'Z';
        }
    }
    display_phase = ((display_phase % 4) + 4) % 4;
    static const char* prefixes[] = {"+", "+i", "-", "-i"};
    return prefixes[display_phase] + letters;
}

std::complex<double> PauliOperator::scalar_phase() const {
    static const std::complex<double> powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[phase_];
}

}  // namespace ftlab
