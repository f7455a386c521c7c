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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <map>
#include <numbers>

#include "ftlab/errors.hpp"
#include "ftlab/executor.hpp"
#include "ftlab/stats.hpp"
#include "test_util.hpp"

using namespace ftlab;

namespace {

// 4x4 matrix conjugation oracle for two-qubit Pauli propagation.
using Mat4 = std::array<std::complex<double>, 16>;

Mat4 mat4_mult(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            for (int k = 0; k < 4; k++) {
                out[4 * r + c] += a[4 * r + k] * b[4 * k + c];
            }
        }
    }
    return out;
}

Mat4 kron(const std::array<std::complex<double>, 4>& a,
          const std::array<std::complex<double>, 4>& b) {
    // Qubit 0 is the low index bit, matching DenseState's convention.
    Mat4 out{};
    for (int r1 = 0; r1 < 2; r1++) {
        for (int c1 = 0; c1 < 2; c1++) {
            for (int r0 = 0; r0 < 2; r0++) {
                for (int c0 = 0; c0 < 2; c0++) {
                    out[4 * (2 * r1 + r0) + (2 * c1 + c0)] = b[2 * r1 + c1] * a[2 * r0 + c0];
                }
            }
        }
    }
    return out;
}

const std::array<std::complex<double>, 4> kI{1, 0, 0, 1};
const std::array<std::complex<double>, 4> kX{0, 1, 1, 0};
const std::array<std::complex<double>, 4> kZ{1, 0, 0, -1};

Mat4 cnot01() {
    // Control qubit 0, target qubit 1 (basis index bit 0 = qubit 0).
    Mat4 m{};
    for (int b = 0; b < 4; b++) {
        int out = (b & 1) ? (b ^ 2) : b;
        m[4 * out + b] = 1;
    }
    return m;
}

double mat4_distance(const Mat4& a, const Mat4& b) {
    double worst = 0;
    for (int k = 0; k < 16; k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace

TEST_CASE("CNOT conjugation oracle: X spreads control to target, Z target to control") {
    Mat4 u = cnot01();
    // CNOT (X x I) CNOT = X x X
    CHECK(mat4_distance(mat4_mult(mat4_mult(u, kron(kX, kI)), u), kron(kX, kX)) < 1e-15);
    // CNOT (I x Z) CNOT = Z x Z
    CHECK(mat4_distance(mat4_mult(mat4_mult(u, kron(kI, kZ)), u), kron(kZ, kZ)) < 1e-15);
}

TEST_CASE("tableau rows track CNOT propagation") {
    StabilizerTableau t(2);
    t.apply_gate(GateKind::CNOT, 0, 1);
    // Destabilizer X_0 becomes X_0 X_1; stabilizer Z_1 becomes Z_0 Z_1.
    CHECK(t.row(0).str() == "+XX");
    CHECK(t.row(3).str() == "+ZZ");
    t.check_invariants();
}

TEST_CASE("H twice leaves both backends unchanged") {
    Rng rng(7);
    for (BackendKind backend : {BackendKind::tableau, BackendKind::dense}) {
        SimState s(backend, 3);
        s.apply_gate(GateKind::H, 1);
        s.apply_gate(GateKind::H, 1);
        CHECK(s.measure(1, 'Z', rng) == 0);
    }
}

TEST_CASE("S applied four times is the identity") {
    SimState dense(BackendKind::dense, 2);
    dense.apply_gate(GateKind::H, 0);
    dense.apply_gate(GateKind::CNOT, 0, 1);
    auto before = dense.dense().amplitudes();
    for (int k = 0; k < 4; k++) {
        dense.apply_gate(GateKind::S, 0);
    }
    auto after = dense.dense().amplitudes();
    for (size_t i = 0; i < before.size(); i++) {
        CHECK(std::abs(before[i] - after[i]) < 1e-12);
    }

    StabilizerTableau t(2);
    t.apply_gate(GateKind::H, 0);
    t.apply_gate(GateKind::CNOT, 0, 1);
    auto row_before = t.row(2).str() + t.row(3).str();
    for (int k = 0; k < 4; k++) {
        t.apply_gate(GateKind::S, 0);
    }
    CHECK(t.row(2).str() + t.row(3).str() == row_before);
}

TEST_CASE("Pauli application and measurement") {
    Rng rng(11);
    for (BackendKind backend : {BackendKind::tableau, BackendKind::dense}) {
        SimState s(backend, 1);
        s.apply_pauli(PauliOperator::from_string("X"));
        CHECK(s.measure(0, 'Z', rng) == 1);

        SimState s2(backend, 1);
        s2.apply_pauli(PauliOperator::from_string("Z"));
        CHECK(s2.measure(0, 'Z', rng) == 0);
    }
}

TEST_CASE("Y equals iXZ on the dense backend including global phase") {
    SimState a(BackendKind::dense, 1);
    a.apply_pauli(PauliOperator::from_string("Y"));
    SimState b(BackendKind::dense, 1);
    b.apply_pauli(PauliOperator::from_string("Z"));
    b.apply_pauli(PauliOperator::from_string("X"));
    std::complex<double> i{0, 1};
    for (int k = 0; k < 2; k++) {
        CHECK(std::abs(a.dense().amplitude(k) - i * b.dense().amplitude(k)) < 1e-15);
    }
}

TEST_CASE("X-basis measurement of |0> is a fair coin") {
    Rng rng(13);
    uint64_t ones = 0;
    const int shots = 10000;
    for (int k = 0; k < shots; k++) {
        SimState s(BackendKind::tableau, 1);
        ones += uint64_t(s.measure(0, 'X', rng));
    }
    auto result = chi2_goodness_of_fit({ones, shots - ones}, {0.5, 0.5});
    CHECK(result.p_value > 0.001);
}

TEST_CASE("repeated measurement is idempotent") {
    Rng rng(17);
    for (int trial = 0; trial < 200; trial++) {
        Circuit c = testing::random_clifford_circuit(4, 8, rng, false);
        for (BackendKind backend : {BackendKind::tableau, BackendKind::dense}) {
            SimState s(backend, 4);
            ShotRecord rec;
            execute_circuit(s, c, NoiseModel::none(), rng, rec);
            uint32_t q = uint32_t(rng.below(4));
            char basis = rng.coin() ? 'Z' : 'X';
            int first = s.measure(q, basis, rng);
            CHECK(s.measure(q, basis, rng) == first);
            CHECK(s.measure(q, basis, rng) == first);
        }
    }
}

TEST_CASE("backend outcome distributions agree on random Clifford circuits") {
    Rng circuit_rng(19);
    const int shots = 10000;
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 2 + uint32_t(circuit_rng.below(5));
        int depth = 1 + int(circuit_rng.below(20));
        Circuit c = testing::random_clifford_circuit(n, depth, circuit_rng, true);
        if (c.num_measurements() == 0) {
            Circuit tail(n);
            tail.begin_step();
            tail.append(Location(GateKind::MEASURE_Z, 0));
            c.extend(tail);
        }
        std::map<std::string, uint64_t> tallies[2];
        for (int which = 0; which < 2; which++) {
            BackendKind backend = which ? BackendKind::dense : BackendKind::tableau;
            for (int shot = 0; shot < shots; shot++) {
                SimState s(backend, n);
                ShotRecord rec;
                Rng rng = Rng::for_shot(1000 + trial * 2 + which, shot);
                execute_circuit(s, c, NoiseModel::none(), rng, rec);
                std::string key(rec.outcomes.begin(), rec.outcomes.end());
                for (auto& ch : key) {
                    ch += '0';
                }
                tallies[which][key]++;
            }
        }
        auto result = chi2_two_sample(tallies[0], tallies[1]);
        REQUIRE(result.p_value > 0.001);
    }
}

TEST_CASE("empty circuit gives an empty record") {
    Circuit c(1);
    ShotRecord rec = run_circuit(c, BackendKind::tableau, NoiseModel::none(), 5);
    CHECK(rec.empty());
}

TEST_CASE("depolarizing noise after preparation flips the readout at 2p/3") {
    // X and Y flip |0>; Z does not. P(read 1) = 2p/3 = 0.2 at p = 0.3.
    Circuit c = Circuit::parse("qubits 1\nPREP_ZERO 0\nMEASURE_Z 0\n");
    const int shots = 100000;
    uint64_t ones = 0;
    NoiseModel noise = NoiseModel::depolarizing(0.3);
    for (int shot = 0; shot < shots; shot++) {
        SimState s(BackendKind::tableau, 1);
        ShotRecord rec;
        Rng rng = Rng::for_shot(23, shot);
        execute_circuit(s, c, noise, rng, rec);
        ones += rec.outcomes[0];
    }
    double expect = 0.2;
    double sigma = std::sqrt(expect * (1 - expect) / shots);
    CHECK(std::abs(double(ones) / shots - expect) < 3 * sigma);
}

TEST_CASE("identical seeds reproduce identical shot records") {
    Rng gen(29);
    Circuit c = testing::random_clifford_circuit(5, 12, gen, true);
    NoiseModel noise = NoiseModel::depolarizing(0.05);
    for (int shot = 0; shot < 50; shot++) {
        SimState a(BackendKind::tableau, 5), b(BackendKind::tableau, 5);
        ShotRecord ra, rb;
        Rng rng_a = Rng::for_shot(99, shot);
        Rng rng_b = Rng::for_shot(99, shot);
        execute_circuit(a, c, noise, rng_a, ra);
        execute_circuit(b, c, noise, rng_b, rb);
        CHECK(ra.outcomes == rb.outcomes);
        REQUIRE(ra.injected.size() == rb.injected.size());
        for (size_t k = 0; k < ra.injected.size(); k++) {
            CHECK(ra.injected[k].site_ordinal == rb.injected[k].site_ordinal);
            CHECK(ra.injected[k].pauli == rb.injected[k].pauli);
        }
    }
}

TEST_CASE("per-shot streams show no serial correlation") {
    // First outcome bit of a fair-coin circuit across consecutive shots.
    Circuit c = Circuit::parse("qubits 1\nH 0\nMEASURE_Z 0\n");
    const int shots = 20000;
    std::vector<int> bits(shots);
    for (int shot = 0; shot < shots; shot++) {
        SimState s(BackendKind::tableau, 1);
        ShotRecord rec;
        Rng rng = Rng::for_shot(31, shot);
        execute_circuit(s, c, NoiseModel::none(), rng, rec);
        bits[shot] = rec.outcomes[0];
    }
    double mean = 0;
    for (int b : bits) {
        mean += b;
    }
    mean /= shots;
    double num = 0, den = 0;
    for (int k = 0; k + 1 < shots; k++) {
        num += (bits[k] - mean) * (bits[k + 1] - mean);
    }
    for (int k = 0; k < shots; k++) {
        den += (bits[k] - mean) * (bits[k] - mean);
    }
    double lag1 = num / den;
    CHECK(std::abs(lag1) < 3.0 / std::sqrt(double(shots)));
}

TEST_CASE("norm stays 1 through deep dense circuits") {
    Rng rng(37);
    Circuit c = testing::random_clifford_circuit(5, 100, rng, false);
    SimState s(BackendKind::dense, 5);
    ShotRecord rec;
    execute_circuit(s, c, NoiseModel::none(), rng, rec);
    CHECK(std::abs(s.dense().norm() - 1.0) < 1e-10);
}

TEST_CASE("tableau invariants hold after every gate") {
    Rng rng(41);
    for (int trial = 0; trial < 10; trial++) {
        Circuit c = testing::random_clifford_circuit(5, 15, rng, true);
        SimState s(BackendKind::tableau, 5);
        ShotRecord rec;
        RunOptions options;
        options.check_invariants = true;
        execute_circuit(s, c, NoiseModel::none(), rng, rec, options);
    }
}

TEST_CASE("T gate: dense works, tableau rejects") {
    SimState dense(BackendKind::dense, 1);
    dense.apply_gate(GateKind::H, 0);
    dense.apply_gate(GateKind::T, 0);
    auto amp1 = dense.dense().amplitude(1);
    CHECK(std::abs(amp1 - std::polar(1.0 / std::numbers::sqrt2, std::numbers::pi / 4)) < 1e-12);

    SimState tab(BackendKind::tableau, 1);
    CHECK_THROWS_AS(tab.apply_gate(GateKind::T, 0), std::invalid_argument);
}

TEST_CASE("dense fidelity golden values") {
    DenseState zero(1);
    DenseState one(1);
    Rng rng(43);
    one.apply_gate(GateKind::X, 0, 0, &rng);
    DenseState plus(1);
    plus.apply_gate(GateKind::H, 0, 0, &rng);
    CHECK(DenseState::fidelity(zero, zero) == doctest::Approx(1.0));
    CHECK(DenseState::fidelity(zero, one) == doctest::Approx(0.0));
    CHECK(DenseState::fidelity(zero, plus) == doctest::Approx(0.5));
    DenseState bigger(2);
    CHECK_THROWS_AS(DenseState::fidelity(zero, bigger), std::invalid_argument);
}

TEST_CASE("coherent noise model requires the dense backend") {
    Circuit c = Circuit::parse("qubits 1\nH 0\n");
    NoiseModel noise;
    noise.kind = NoiseKind::coherent;
    noise.theta = 0.3;
    SimState s(BackendKind::tableau, 1);
    ShotRecord rec;
    Rng rng(47);
    CHECK_THROWS_AS(execute_circuit(s, c, noise, rng, rec), ConfigError);
}
