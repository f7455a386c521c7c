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

#include <stdexcept>
#include <variant>

#include "ftlab/dense_state.hpp"
#include "ftlab/tableau.hpp"

namespace ftlab {

enum class BackendKind { tableau, dense };

inline const char* backend_name(BackendKind b) {
    return b == BackendKind::tableau ? "tableau" : "dense";
}

/// One circuit-execution state behind either backend. Gadget and experiment
/// code is written against this wrapper so each piece runs identically on
/// the fast tableau engine and the exact dense oracle.
class SimState {
  public:
    SimState(BackendKind kind, uint32_t n)
        : impl_(kind == BackendKind::tableau
                    ? std::variant<StabilizerTableau, DenseState>{StabilizerTableau(n)}
                    : std::variant<StabilizerTableau, DenseState>{DenseState(n)}) {}

    BackendKind kind() const {
        return std::holds_alternative<StabilizerTableau>(impl_) ? BackendKind::tableau
                                                                : BackendKind::dense;
    }

    uint32_t num_qubits() const {
        return std::visit([](const auto& s) { return s.num_qubits(); }, impl_);
    }

    /// Back to |0...0> without reallocating.
    void reset() {
        if (auto* t = std::get_if<StabilizerTableau>(&impl_)) {
            t->reset_to_zero();
        } else {
            std::get<DenseState>(impl_).reset_all_zero();
        }
    }

    void apply_gate(GateKind g, uint32_t q0, uint32_t q1 = 0, Rng* rng = nullptr) {
        std::visit([&](auto& s) { s.apply_gate(g, q0, q1, rng); }, impl_);
    }

    void apply_pauli(const PauliOperator& p) {
        std::visit([&](auto& s) { s.apply_pauli(p); }, impl_);
    }

    void apply_rz(uint32_t q, double theta) {
        if (auto* dense = std::get_if<DenseState>(&impl_)) {
            dense->apply_rz(q, theta);
        } else {
            throw std::invalid_argument("coherent rotations need the dense backend");
        }
    }

    int measure(uint32_t q, char basis, Rng& rng) {
        return std::visit([&](auto& s) { return s.measure(q, basis, rng); }, impl_);
    }

    StabilizerTableau& tableau() { return std::get<StabilizerTableau>(impl_); }
    const StabilizerTableau& tableau() const { return std::get<StabilizerTableau>(impl_); }
    DenseState& dense() { return std::get<DenseState>(impl_); }
    const DenseState& dense() const { return std::get<DenseState>(impl_); }

  private:
    std::variant<StabilizerTableau, DenseState> impl_;
};

}  // namespace ftlab
