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
#include <vector>

#include "ftlab/circuit.hpp"
#include "ftlab/pauli.hpp"
#include "ftlab/rng.hpp"

namespace ftlab {

/// Exact state-vector backend. Supports every gate (including T and Rz) and
/// serves as the verification oracle for the tableau engine. Qubit q is bit
/// q of the amplitude index, so the basis label string reads qubit 0 first.
class DenseState {
  public:
    static constexpr uint32_t kMaxQubits = 24;

    explicit DenseState(uint32_t n);

    uint32_t num_qubits() const { return n_; }

    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
    std::complex<double> amplitude(uint64_t basis) const { return amps_[basis]; }
    void set_amplitudes(std::vector<std::complex<double>> amps);

    void reset_all_zero();

    void apply_gate(GateKind g, uint32_t q0, uint32_t q1 = 0, Rng* rng = nullptr);
    void apply_pauli(const PauliOperator& p);

    /// diag(1, e^{i theta}) on one qubit — the coherent over-rotation.
    void apply_rz(uint32_t q, double theta);

    /// Z- or X-basis projective measurement. Outcomes with probability
    /// within 1e-12 of 0 or 1 are returned without consuming randomness.
    int measure(uint32_t q, char basis, Rng& rng);

    double prob_one(uint32_t q) const;

    double norm() const;

    /// |<a|b>|^2 — insensitive to global phase.
    static double fidelity(const DenseState& a, const DenseState& b);

    static std::complex<double> inner_product(const DenseState& a, const DenseState& b);

  private:
    void apply_single(uint32_t q, const std::complex<double> m[4]);
    void apply_cnot(uint32_t control, uint32_t target);
    void project(uint32_t q, int outcome, double prob);

    uint32_t n_;
    std::vector<std::complex<double>> amps_;
};

}  // namespace ftlab
