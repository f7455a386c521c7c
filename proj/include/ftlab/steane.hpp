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
#include <optional>

#include "ftlab/hamming.hpp"
#include "ftlab/sim_state.hpp"

namespace ftlab {

/// Seven physical qubits encoding one logical qubit. Position p (1..7)
/// corresponds to bit p of the classical codeword strings.
struct SteaneBlock {
    int id = 0;
    std::array<uint32_t, 7> physical_qubits{};

    static SteaneBlock contiguous(uint32_t first_qubit, int id = 0) {
        SteaneBlock b;
        b.id = id;
        for (int i = 0; i < 7; i++) {
            b.physical_qubits[i] = first_qubit + i;
        }
        return b;
    }

    uint32_t qubit(int position) const { return physical_qubits[position - 1]; }
};

enum class LogicalGateKind { X, Y, Z, H, S, CNOT, T };

struct LogicalGate {
    LogicalGateKind kind;
    SteaneBlock a;
    std::optional<SteaneBlock> b;  // CNOT target block
};

/// Logical basis states used by experiments. Arbitrary amplitudes are only
/// expressible on the dense backend (encode_ideal / inject_encoded).
enum class LogicalInput { zero, one, plus };

const char* logical_input_name(LogicalInput in);
LogicalInput logical_input_from_name(const std::string& name);

/// The six stabilizer generators: X-type then Z-type, each supported on one
/// parity-check row, embedded in an n-qubit register.
std::vector<PauliOperator> stabilizer_generators(uint32_t n, const SteaneBlock& block);

/// Weight-7 logical operator representatives.
PauliOperator logical_x(uint32_t n, const SteaneBlock& block);
PauliOperator logical_z(uint32_t n, const SteaneBlock& block);
/// Weight-3 equivalents (the representative supported on positions 5,6,7).
PauliOperator logical_x_weight3(uint32_t n, const SteaneBlock& block);
PauliOperator logical_z_weight3(uint32_t n, const SteaneBlock& block);

/// Preparation schedule shared by the physical encoding circuit and its
/// block-level (concatenated) counterpart: Hadamard pivot positions and
/// three rounds of disjoint (control position, target position) CNOT pairs.
struct EncodingSchedule {
    std::array<int, 3> pivots;
    std::array<std::array<std::pair<int, int>, 3>, 3> rounds;
};
const EncodingSchedule& encoding_schedule();

/// Non-fault-tolerant |0_L> preparation circuit: Hadamards on the pivot
/// positions 4, 6, 7 then a CNOT fan spreading each parity-check row.
Circuit encoding_circuit(uint32_t n, const SteaneBlock& block);

/// encoding_circuit plus the transversal rotation to `input`.
Circuit encoding_circuit_for_input(uint32_t n, const SteaneBlock& block, LogicalInput input);

/// Transversal physical realization of one logical gate. S_L is transversal
/// S_DAG (pinned by a golden test); T is rejected here — it goes through
/// the teleportation gadget.
Circuit logical_gate_circuit(uint32_t n, const LogicalGate& gate);

/// Ideal 7-qubit encoded state alpha|0_L> + beta|1_L> built directly from
/// the codeword amplitudes.
DenseState encode_ideal(std::complex<double> alpha, std::complex<double> beta);
DenseState encode_ideal(int logical_bit);

/// Spreads a register block from |0000000> into alpha|0_L> + beta|1_L>.
/// The block qubits must currently be |0> and unentangled.
void inject_encoded(DenseState& state, const SteaneBlock& block, std::complex<double> alpha,
                    std::complex<double> beta);

/// Noiseless encoded-input preparation on either backend (runs the encoding
/// circuit without noise).
void ideal_encode(SimState& state, const SteaneBlock& block, LogicalInput input, Rng& rng);

struct DestructiveMeasurement {
    int logical_bit;
    Word7 raw_word;
    Word7 corrected_word;
    int corrected_position;  // 0 when no flip was needed
};

/// Measures all seven qubits (Z or X basis), classically corrects the word,
/// and reports the codeword parity as the logical value. Noiseless; noisy
/// readout goes through circuit execution instead.
DestructiveMeasurement measure_logical_destructive(SimState& state, const SteaneBlock& block,
                                                   char basis, Rng& rng);

/// Interprets seven measured bits as a block word and decodes it.
DestructiveMeasurement decode_measured_word(const uint8_t bits[7]);

}  // namespace ftlab
