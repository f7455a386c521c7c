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
#include <vector>

#include "ftlab/circuit.hpp"
#include "ftlab/pauli.hpp"
#include "ftlab/rng.hpp"
#include "ftlab/steane.hpp"

namespace ftlab::testing {

/// Independent matrix-action oracle for Pauli algebra: a Pauli is a monomial
/// matrix, column c holds value i^p * (-1)^<z,c> at row c XOR x. Products are
/// composed column-wise, never through the symplectic phase rules under test.
struct MonomialMatrix {
    size_t dim;
    std::vector<uint64_t> row_of;               // per column
    std::vector<std::complex<double>> value;    // per column

    static MonomialMatrix from_pauli(const PauliOperator& p) {
        MonomialMatrix m;
        m.dim = uint64_t{1} << p.num_qubits();
        m.row_of.resize(m.dim);
        m.value.resize(m.dim);
        uint64_t x = 0, z = 0;
        for (size_t q = 0; q < p.num_qubits(); q++) {
            x |= uint64_t{p.x_bit(q)} << q;
            z |= uint64_t{p.z_bit(q)} << q;
        }
        static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        for (uint64_t c = 0; c < m.dim; c++) {
            m.row_of[c] = c ^ x;
            int sign = __builtin_parityll(c & z) ? -1 : 1;
            m.value[c] = powers[p.phase()] * double(sign);
        }
        return m;
    }

    /// this * other as matrices (apply `other` first).
    MonomialMatrix times(const MonomialMatrix& other) const {
        MonomialMatrix out;
        out.dim = dim;
        out.row_of.resize(dim);
        out.value.resize(dim);
        for (uint64_t c = 0; c < dim; c++) {
            uint64_t mid = other.row_of[c];
            out.row_of[c] = row_of[mid];
            out.value[c] = other.value[c] * value[mid];
        }
        return out;
    }

    double max_difference(const MonomialMatrix& other) const {
        double worst = 0;
        for (uint64_t c = 0; c < dim; c++) {
            if (row_of[c] != other.row_of[c]) {
                return 2.0;  // structurally different matrices
            }
            worst = std::max(worst, std::abs(value[c] - other.value[c]));
        }
        return worst;
    }
};

inline PauliOperator random_pauli(size_t n, Rng& rng) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_x(q, rng.coin());
        p.set_z(q, rng.coin());
    }
    p.set_phase(int(rng.below(4)));
    return p;
}

/// Random Clifford(+measurement/reset) circuit for backend cross-checks.
inline Circuit random_clifford_circuit(uint32_t n, int depth, Rng& rng, bool with_measurements) {
    Circuit c(n);
    for (int d = 0; d < depth; d++) {
        c.begin_step();
        std::vector<uint32_t> free;
        for (uint32_t q = 0; q < n; q++) {
            free.push_back(q);
        }
        // Fill roughly half the register each step.
        size_t uses = 1 + rng.below(n);
        for (size_t k = 0; k < uses && !free.empty(); k++) {
            size_t pick = rng.below(free.size());
            uint32_t q = free[pick];
            free.erase(free.begin() + pick);
            int kind = int(rng.below(with_measurements ? 9 : 7));
            switch (kind) {
                case 0: c.append(Location(GateKind::H, q)); break;
                case 1: c.append(Location(GateKind::S, q)); break;
                case 2: c.append(Location(GateKind::S_DAG, q)); break;
                case 3: c.append(Location(GateKind::X, q)); break;
                case 4: c.append(Location(GateKind::Y, q)); break;
                case 5: c.append(Location(GateKind::Z, q)); break;
                case 6: {
                    if (free.empty()) {
                        c.append(Location(GateKind::H, q));
                        break;
                    }
                    size_t pick2 = rng.below(free.size());
                    uint32_t t = free[pick2];
                    free.erase(free.begin() + pick2);
                    c.append(Location(GateKind::CNOT, q, t));
                    break;
                }
                case 7: c.append(Location(GateKind::MEASURE_Z, q)); break;
                case 8: c.append(Location(GateKind::MEASURE_X, q)); break;
            }
        }
    }
    return c;
}

/// Transversality check: every two-qubit location crossing block boundaries
/// must pair position i of one block with position i of another, so a
/// single faulty location cannot spread beyond one error per block.
/// Intra-block couplings are forbidden unless `allow_intra_block` is set —
/// the one legitimate place is the non-fault-tolerant encoding circuit
/// inside verified preparation, whose output gets checked before use.
inline bool is_transversal(const Circuit& c, const std::vector<SteaneBlock>& blocks,
                           bool allow_intra_block = false) {
    auto position_of = [&](uint32_t q, int& block_out) -> int {
        for (size_t b = 0; b < blocks.size(); b++) {
            for (int pos = 1; pos <= 7; pos++) {
                if (blocks[b].qubit(pos) == q) {
                    block_out = int(b);
                    return pos;
                }
            }
        }
        block_out = -1;
        return -1;
    };
    for (const auto& step : c.steps()) {
        for (const Location& loc : step) {
            if (!is_two_qubit(loc.gate)) {
                continue;
            }
            int b0, b1;
            int p0 = position_of(loc.q0, b0);
            int p1 = position_of(loc.q1, b1);
            if (p0 < 0 || p1 < 0) {
                continue;  // both outside any block: no constraint
            }
            if (b0 == b1) {
                if (!allow_intra_block) {
                    return false;
                }
                continue;
            }
            if (p0 != p1) {
                return false;
            }
        }
    }
    return true;
}

/// True when the circuit contains a two-qubit gate within a single block.
inline bool has_intra_block_coupling(const Circuit& c, const std::vector<SteaneBlock>& blocks) {
    return is_transversal(c, blocks, true) && !is_transversal(c, blocks, false);
}

}  // namespace ftlab::testing
