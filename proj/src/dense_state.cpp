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

#include "ftlab/dense_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ftlab {

namespace {

constexpr double kDeterministicTol = 1e-12;
const std::complex<double> kInvSqrt2{std::numbers::sqrt2 / 2.0, 0};

}  // namespace

DenseState::DenseState(uint32_t n) : n_(n) {
    if (n > kMaxQubits) {
        throw std::invalid_argument("dense backend limited to " + std::to_string(kMaxQubits) +
                                    " qubits");
    }
    amps_.assign(uint64_t{1} << n, {});
    amps_[0] = 1.0;
}

void DenseState::set_amplitudes(std::vector<std::complex<double>> amps) {
    if (amps.size() != amps_.size()) {
        throw std::invalid_argument("amplitude vector has wrong dimension");
    }
    double total = 0;
    for (const auto& a : amps) {
        total += std::norm(a);
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    amps_ = std::move(amps);
}

void DenseState::reset_all_zero() {
    std::fill(amps_.begin(), amps_.end(), std::complex<double>{});
    amps_[0] = 1.0;
}

void DenseState::apply_single(uint32_t q, const std::complex<double> m[4]) {
    const uint64_t bit = uint64_t{1} << q;
    for (uint64_t base = 0; base < amps_.size(); base += 2 * bit) {
        for (uint64_t low = 0; low < bit; low++) {
            uint64_t i0 = base | low;
            uint64_t i1 = i0 | bit;
            auto a0 = amps_[i0];
            auto a1 = amps_[i1];
            amps_[i0] = m[0] * a0 + m[1] * a1;
            amps_[i1] = m[2] * a0 + m[3] * a1;
        }
    }
}

void DenseState::apply_cnot(uint32_t control, uint32_t target) {
    const uint64_t cbit = uint64_t{1} << control;
    const uint64_t tbit = uint64_t{1} << target;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void DenseState::apply_gate(GateKind g, uint32_t q0, uint32_t q1, Rng* rng) {
    if (q0 >= n_ || (is_two_qubit(g) && q1 >= n_)) {
        throw std::invalid_argument("qubit index out of range");
    }
    using cd = std::complex<double>;
    switch (g) {
        case GateKind::H: {
            const cd m[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
            apply_single(q0, m);
            break;
        }
        case GateKind::S: {
            const cd m[4] = {1, 0, 0, cd{0, 1}};
            apply_single(q0, m);
            break;
        }
        case GateKind::S_DAG: {
            const cd m[4] = {1, 0, 0, cd{0, -1}};
            apply_single(q0, m);
            break;
        }
        case GateKind::X: {
            const cd m[4] = {0, 1, 1, 0};
            apply_single(q0, m);
            break;
        }
        case GateKind::Y: {
            const cd m[4] = {0, cd{0, -1}, cd{0, 1}, 0};
            apply_single(q0, m);
            break;
        }
        case GateKind::Z: {
            const cd m[4] = {1, 0, 0, -1};
            apply_single(q0, m);
            break;
        }
        case GateKind::T: {
            const cd m[4] = {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
            apply_single(q0, m);
            break;
        }
        case GateKind::CNOT:
            apply_cnot(q0, q1);
            break;
        case GateKind::MEASURE_Z:
            if (!rng) {
                throw std::invalid_argument("measurement gate requires an rng");
            }
            measure(q0, 'Z', *rng);
            break;
        case GateKind::MEASURE_X:
            if (!rng) {
                throw std::invalid_argument("measurement gate requires an rng");
            }
            measure(q0, 'X', *rng);
            break;
        case GateKind::PREP_ZERO: {
            if (!rng) {
                throw std::invalid_argument("reset requires an rng");
            }
            if (measure(q0, 'Z', *rng) == 1) {
                const cd m[4] = {0, 1, 1, 0};
                apply_single(q0, m);
            }
            break;
        }
    }
}

void DenseState::apply_pauli(const PauliOperator& p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli dimension mismatch");
    }
    // Phase convention: i^phase * X^x * Z^z, Z applied first.
    for (uint32_t q = 0; q < n_; q++) {
        if (p.z_bit(q)) {
            apply_gate(GateKind::Z, q);
        }
    }
    for (uint32_t q = 0; q < n_; q++) {
        if (p.x_bit(q)) {
            apply_gate(GateKind::X, q);
        }
    }
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    if (p.phase() != 0) {
        for (auto& a : amps_) {
            a *= powers[p.phase()];
        }
    }
}

void DenseState::apply_rz(uint32_t q, double theta) {
    if (q >= n_) {
        throw std::invalid_argument("qubit index out of range");
    }
    const std::complex<double> m[4] = {1, 0, 0, std::polar(1.0, theta)};
    apply_single(q, m);
}

double DenseState::prob_one(uint32_t q) const {
    const uint64_t bit = uint64_t{1} << q;
    double p = 0;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

void DenseState::project(uint32_t q, int outcome, double prob) {
    const uint64_t bit = uint64_t{1} << q;
    const double scale = 1.0 / std::sqrt(prob);
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (((i & bit) != 0) == (outcome == 1)) {
            amps_[i] *= scale;
        } else {
            amps_[i] = 0;
        }
    }
}

int DenseState::measure(uint32_t q, char basis, Rng& rng) {
    if (q >= n_) {
        throw std::invalid_argument("qubit index out of range");
    }
    if (basis == 'X') {
        apply_gate(GateKind::H, q);
        int bit = measure(q, 'Z', rng);
        apply_gate(GateKind::H, q);
        return bit;
    }
    double p1 = prob_one(q);
    if (p1 < kDeterministicTol) {
        return 0;
    }
    if (p1 > 1 - kDeterministicTol) {
        return 1;
    }
    int outcome = rng.uniform() < p1 ? 1 : 0;
    project(q, outcome, outcome ? p1 : 1 - p1);
    return outcome;
}

double DenseState::norm() const {
    double total = 0;
    for (const auto& a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

std::complex<double> DenseState::inner_product(const DenseState& a, const DenseState& b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("inner product dimension mismatch");
    }
    std::complex<double> sum{};
    for (uint64_t i = 0; i < a.amps_.size(); i++) {
        sum += std::conj(a.amps_[i]) * b.amps_[i];
    }
    return sum;
}

double DenseState::fidelity(const DenseState& a, const DenseState& b) {
    return std::norm(inner_product(a, b));
}

}  // namespace ftlab
