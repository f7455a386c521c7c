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

#include <complex>
#include <cstdint>
#include <string>

#include "ftlab/bitvec.hpp"

namespace ftlab {

/// An n-qubit Pauli operator stored as i^phase * X^x * Z^z, with x and z bit
/// vectors and the phase an exact integer power of i.
///
/// In this normal form Y = i*X*Z has x=1, z=1, phase=1 on its qubit.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(size_t n) : n_(n), x_(n), z_(n) {}

    /// Builds from a word like "+XIYZ" or "-iXX"; an optional leading
    /// +/-/i/-i phase, then one letter per qubit.
    static PauliOperator from_string(const std::string& word);

    /// Single-qubit X/Y/Z embedded at `qubit` of an n-qubit identity.
    static PauliOperator single(size_t n, size_t qubit, char kind);

    size_t num_qubits() const { return n_; }
    const BitVec& x_mask() const { return x_; }
    const BitVec& z_mask() const { return z_; }
    int phase() const { return phase_; }

    bool x_bit(size_t q) const { return x_.get(q); }
    bool z_bit(size_t q) const { return z_.get(q); }

    void set_x(size_t q, bool v) { x_.set(q, v); }
    void set_z(size_t q, bool v) { z_.set(q, v); }
    void set_phase(int p) { phase_ = ((p % 4) + 4) % 4; }

    bool is_identity() const { return !x_.any() && !z_.any(); }

    /// Number of qubits acted on non-trivially.
    size_t weight() const { return x_.union_count(z_); }

    bool commutes_with(const PauliOperator& other) const {
        return ((x_.overlap(other.z_) + z_.overlap(other.x_)) & 1) == 0;
    }

    /// Exact group product: (*this) * rhs as matrices, phase tracked mod 4.
    PauliOperator operator*(const PauliOperator& rhs) const;

    PauliOperator inverse() const;

    /// Hermitian-conjugation-free equality: same masks and phase.
    bool operator==(const PauliOperator& other) const = default;

    /// Renders in the conventional I/X/Y/Z letters with a leading phase,
    /// e.g. "-iYZ". Position 1 of the operator is the first letter.
    std::string str() const;

    /// The complex scalar i^phase adjusted so the letters read I/X/Y/Z
    /// (each Y contributes one factor of i to the normal form).
    std::complex<double> scalar_phase() const;

  private:
    size_t n_ = 0;
    BitVec x_, z_;
    int phase_ = 0;  // power of i, 0..3
};

}  // namespace ftlab
