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

#include "ftlab/steane.hpp"

#include <cmath>
#include <stdexcept>

#include "ftlab/executor.hpp"

namespace ftlab {

namespace {

// Positions appearing only in one parity-check row; Hadamards there plus a
// CNOT fan generate the even-codeword superposition.
constexpr int kPivots[3] = {4, 6, 7};

PauliOperator row_pauli(uint32_t n, const SteaneBlock& block, Word7 support, char kind) {
    PauliOperator p(n);
    for (int pos = 1; pos <= 7; pos++) {
        if ((support >> (pos - 1)) & 1) {
            uint32_t q = block.qubit(pos);
            if (kind == 'X' || kind == 'Y') {
                p.set_x(q, true);
            }
            if (kind == 'Z' || kind == 'Y') {
                p.set_z(q, true);
            }
        }
    }
    return p;
}

}  // namespace

const char* logical_input_name(LogicalInput in) {
    switch (in) {
        case LogicalInput::zero: return "0";
        case LogicalInput::one: return "1";
        case LogicalInput::plus: return "+";
    }
    return "?";
}

LogicalInput logical_input_from_name(const std::string& name) {
    if (name == "0" || name == "zero") {
        return LogicalInput::zero;
    }
    if (name == "1" || name == "one") {
        return LogicalInput::one;
    }
    if (name == "+" || name == "plus") {
        return LogicalInput::plus;
    }
    throw std::invalid_argument("unknown logical input: " + name);
}

std::vector<PauliOperator> stabilizer_generators(uint32_t n, const SteaneBlock& block) {
    std::vector<PauliOperator> gens;
    for (char kind : {'X', 'Z'}) {
        for (Word7 row : hamming().parity_check()) {
            gens.push_back(row_pauli(n, block, row, kind));
        }
    }
    return gens;
}

PauliOperator logical_x(uint32_t n, const SteaneBlock& block) {
    return row_pauli(n, block, 0x7F, 'X');
}

PauliOperator logical_z(uint32_t n, const SteaneBlock& block) {
    return row_pauli(n, block, 0x7F, 'Z');
}

PauliOperator logical_x_weight3(uint32_t n, const SteaneBlock& block) {
    return row_pauli(n, block, word_from_string("0000111"), 'X');
}

PauliOperator logical_z_weight3(uint32_t n, const SteaneBlock& block) {
    return row_pauli(n, block, word_from_string("0000111"), 'Z');
}

const EncodingSchedule& encoding_schedule() {
    static const EncodingSchedule schedule = [] {
        const auto& rows = hamming().parity_check();
        std::array<std::vector<int>, 3> targets;
        for (int r = 0; r < 3; r++) {
            for (int pos = 1; pos <= 7; pos++) {
                if (pos != kPivots[r] && ((rows[r] >> (pos - 1)) & 1)) {
                    targets[r].push_back(pos);
                }
            }
        }
        // plan[round][row] = which of the row's three targets fires; found by
        // backtracking so no round touches a position twice.
        std::array<std::array<int, 3>, 3> plan{};
        std::array<std::array<bool, 3>, 3> used{};
        auto solve = [&](auto&& self, int slot) -> bool {
            if (slot == 9) {
                return true;
            }
            int round = slot / 3, row = slot % 3;
            for (int t = 0; t < 3; t++) {
                if (used[row][t]) {
                    continue;
                }
                bool clash = false;
                for (int prev = 0; prev < row; prev++) {
                    if (targets[prev][plan[round][prev]] == targets[row][t]) {
                        clash = true;
                        break;
                    }
                }
                if (clash) {
                    continue;
                }
                plan[round][row] = t;
                used[row][t] = true;
                if (self(self, slot + 1)) {
                    return true;
                }
                used[row][t] = false;
            }
            return false;
        };
        if (!solve(solve, 0)) {
            throw std::logic_error("no conflict-free CNOT schedule for the encoding circuit");
        }
        EncodingSchedule out;
        out.pivots = {kPivots[0], kPivots[1], kPivots[2]};
        for (int round = 0; round < 3; round++) {
            for (int r = 0; r < 3; r++) {
                out.rounds[round][r] = {kPivots[r], targets[r][plan[round][r]]};
            }
        }
        return out;
    }();
    return schedule;
}

Circuit encoding_circuit(uint32_t n, const SteaneBlock& block) {
    const EncodingSchedule& schedule = encoding_schedule();
    Circuit c(n);
    c.begin_step();
    for (int pivot : schedule.pivots) {
        c.append(Location(GateKind::H, block.qubit(pivot)));
    }
    for (const auto& round : schedule.rounds) {
        c.begin_step();
        for (const auto& [control, target] : round) {
            c.append(Location(GateKind::CNOT, block.qubit(control), block.qubit(target)));
        }
    }
    return c;
}

Circuit encoding_circuit_for_input(uint32_t n, const SteaneBlock& block, LogicalInput input) {
    Circuit c = encoding_circuit(n, block);
    if (input == LogicalInput::one) {
        c.extend(logical_gate_circuit(n, LogicalGate{LogicalGateKind::X, block, {}}));
    } else if (input == LogicalInput::plus) {
        c.extend(logical_gate_circuit(n, LogicalGate{LogicalGateKind::H, block, {}}));
    }
    return c;
}

Circuit logical_gate_circuit(uint32_t n, const LogicalGate& gate) {
    Circuit c(n);
    c.begin_step();
    GateKind phys;
    switch (gate.kind) {
        case LogicalGateKind::X: phys = GateKind::X; break;
        case LogicalGateKind::Y: phys = GateKind::Y; break;
        case LogicalGateKind::Z: phys = GateKind::Z; break;
        case LogicalGateKind::H: phys = GateKind::H; break;
        case LogicalGateKind::S: phys = GateKind::S_DAG; break;  // -pi/4 per qubit
        case LogicalGateKind::CNOT: {
            if (!gate.b) {
                throw std::invalid_argument("logical CNOT needs a target block");
            }
            for (int pos = 1; pos <= 7; pos++) {
                c.append(Location(GateKind::CNOT, gate.a.qubit(pos), gate.b->qubit(pos)));
            }
            return c;
        }
        case LogicalGateKind::T:
            throw std::invalid_argument(
                "logical T is not transversal; use the teleportation gadget");
        default:
            throw std::invalid_argument("unknown logical gate");
    }
    for (int pos = 1; pos <= 7; pos++) {
        c.append(Location(phys, gate.a.qubit(pos)));
    }
    return c;
}

DenseState encode_ideal(std::complex<double> alpha, std::complex<double> beta) {
    double total = std::norm(alpha) + std::norm(beta);
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("logical amplitudes are not normalized");
    }
    DenseState state(7);
    std::vector<std::complex<double>> amps(1 << 7, std::complex<double>{});
    const double scale = 1.0 / std::sqrt(8.0);
    for (Word7 w : hamming().even_codewords()) {
        amps[w] = alpha * scale;
    }
    for (Word7 w : hamming().odd_codewords()) {
        amps[w] = beta * scale;
    }
    state.set_amplitudes(std::move(amps));
    return state;
}

DenseState encode_ideal(int logical_bit) {
    return logical_bit ? encode_ideal(0.0, 1.0) : encode_ideal(1.0, 0.0);
}

void inject_encoded(DenseState& state, const SteaneBlock& block, std::complex<double> alpha,
                    std::complex<double> beta) {
    double total = std::norm(alpha) + std::norm(beta);
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("logical amplitudes are not normalized");
    }
    uint64_t block_mask = 0;
    for (uint32_t q : block.physical_qubits) {
        block_mask |= uint64_t{1} << q;
    }
    auto spread = [&](uint64_t index, Word7 w) {
        uint64_t out = index;
        for (int pos = 1; pos <= 7; pos++) {
            if ((w >> (pos - 1)) & 1) {
                out |= uint64_t{1} << block.qubit(pos);
            }
        }
        return out;
    };
    std::vector<std::complex<double>> amps = state.amplitudes();
    const double scale = 1.0 / std::sqrt(8.0);
    for (uint64_t i = 0; i < amps.size(); i++) {
        if ((i & block_mask) != 0 && std::norm(amps[i]) > 1e-24) {
            throw std::invalid_argument("inject_encoded: block is not in |0...0>");
        }
    }
    for (uint64_t i = 0; i < amps.size(); i++) {
        if ((i & block_mask) != 0) {
            continue;
        }
        std::complex<double> a = amps[i];
        if (std::norm(a) == 0.0) {
            continue;
        }
        amps[i] = 0;
        for (Word7 w : hamming().even_codewords()) {
            amps[spread(i, w)] += a * alpha * scale;
        }
        for (Word7 w : hamming().odd_codewords()) {
            amps[spread(i, w)] += a * beta * scale;
        }
    }
    state.set_amplitudes(std::move(amps));
}

void ideal_encode(SimState& state, const SteaneBlock& block, LogicalInput input, Rng& rng) {
    Circuit c = encoding_circuit_for_input(state.num_qubits(), block, input);
    ShotRecord scratch;
    execute_circuit(state, c, NoiseModel::none(), rng, scratch);
}

DestructiveMeasurement decode_measured_word(const uint8_t bits[7]) {
    Word7 raw = 0;
    for (int i = 0; i < 7; i++) {
        raw |= Word7((bits[i] & 1) << i);
    }
    auto fix = hamming().correct(raw);
    return DestructiveMeasurement{hamming().codeword_parity(fix.corrected), raw, fix.corrected,
                                  fix.flipped_position};
}

DestructiveMeasurement measure_logical_destructive(SimState& state, const SteaneBlock& block,
                                                   char basis, Rng& rng) {
    uint8_t bits[7];
    for (int pos = 1; pos <= 7; pos++) {
        bits[pos - 1] = uint8_t(state.measure(block.qubit(pos), basis, rng));
    }
    return decode_measured_word(bits);
}

}  // namespace ftlab
