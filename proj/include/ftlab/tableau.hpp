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
#include <vector>

#include "ftlab/circuit.hpp"
#include "ftlab/pauli.hpp"
#include "ftlab/rng.hpp"

namespace ftlab {

/// Stabilizer tableau backend: n destabilizer rows and n stabilizer rows,
/// bit-packed with word-level row products. Clifford gates and Pauli-basis
/// measurement only; T is rejected.
class StabilizerTableau {
  public:
    explicit StabilizerTableau(uint32_t n);

    uint32_t num_qubits() const { return n_; }

    /// Back to the |0...0> tableau without reallocating.
    void reset_to_zero();

    void apply_gate(GateKind g, uint32_t q0, uint32_t q1 = 0, Rng* rng = nullptr);
    void apply_pauli(const PauliOperator& p);

    int measure(uint32_t q, char basis, Rng& rng);

    /// True when a Z measurement of q would not consume randomness.
    bool is_deterministic_z(uint32_t q) const;

    /// Row accessors for invariant checks and tests. Index 0..n-1 are
    /// destabilizers, n..2n-1 stabilizers. Sign folds into the phase as
    /// i^0 or i^2.
    PauliOperator row(uint32_t r) const;

    /// Verifies commutation structure and GF(2) row independence; throws
    /// std::logic_error with a description on violation.
    void check_invariants() const;

  private:
    uint64_t& xs(uint32_t row, uint32_t word) { return xs_[row * words_ + word]; }
    uint64_t& zs(uint32_t row, uint32_t word) { return zs_[row * words_ + word]; }
    const uint64_t& xs(uint32_t row, uint32_t word) const { return xs_[row * words_ + word]; }
    const uint64_t& zs(uint32_t row, uint32_t word) const { return zs_[row * words_ + word]; }

    bool x_bit(uint32_t row, uint32_t q) const { return (xs(row, q >> 6) >> (q & 63)) & 1; }
    bool z_bit(uint32_t row, uint32_t q) const { return (zs(row, q >> 6) >> (q & 63)) & 1; }

    /// row h := row i * row h, with the exact i-power phase bookkeeping.
    void mult_into(uint32_t h, uint32_t i);

    int measure_z(uint32_t q, Rng& rng);

    uint32_t n_;
    uint32_t words_;
    std::vector<uint64_t> xs_, zs_;  // (2n+1) rows; last row is scratch
    std::vector<uint8_t> signs_;
};

}  // namespace ftlab
