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

#include <numbers>
#include <set>

#include "ftlab/executor.hpp"
#include "ftlab/gadgets.hpp"
#include "ftlab/pauli_decompose.hpp"
#include "ftlab/stats.hpp"
#include "test_util.hpp"

using namespace ftlab;

namespace {

const double kInvSqrt8 = 1.0 / std::sqrt(8.0);

DenseState run_ideal(const Circuit& c, uint32_t n, uint64_t seed = 7) {
    SimState s(BackendKind::dense, n);
    ShotRecord rec;
    Rng rng = Rng::for_shot(seed, 0);
    execute_circuit(s, c, NoiseModel::none(), rng, rec);
    return s.dense();
}

/// Independent construction of a two-block encoded state from arbitrary
/// logical amplitudes c[b1*2+b0]; blocks at qubits 0..6 and 7..13.
DenseState encode_logical_pair(const std::array<cdouble, 4>& logical) {
    DenseState state(14);
    std::vector<cdouble> amps(1 << 14, cdouble{});
    for (int b0 = 0; b0 < 2; b0++) {
        const auto& words0 = b0 ? hamming().odd_codewords() : hamming().even_codewords();
        for (int b1 = 0; b1 < 2; b1++) {
            const auto& words1 = b1 ? hamming().odd_codewords() : hamming().even_codewords();
            cdouble coeff = logical[2 * b1 + b0] / 8.0;
            if (std::norm(coeff) == 0) {
                continue;
            }
            for (Word7 w0 : words0) {
                for (Word7 w1 : words1) {
                    amps[uint64_t(w0) | (uint64_t(w1) << 7)] += coeff;
                }
            }
        }
    }
    state.set_amplitudes(std::move(amps));
    return state;
}

}  // namespace

TEST_CASE("encoded zero is the uniform even-codeword superposition") {
    DenseState zero = encode_ideal(0);
    std::set<Word7> support(hamming().even_codewords().begin(),
                            hamming().even_codewords().end());
    for (uint64_t i = 0; i < 128; i++) {
        if (support.count(Word7(i))) {
            CHECK(std::abs(zero.amplitude(i) - cdouble{kInvSqrt8}) < 1e-12);
        } else {
            CHECK(std::abs(zero.amplitude(i)) < 1e-12);
        }
    }
}

TEST_CASE("encoded one is the uniform odd-codeword superposition") {
    DenseState one = encode_ideal(1);
    std::set<Word7> support(hamming().odd_codewords().begin(), hamming().odd_codewords().end());
    for (uint64_t i = 0; i < 128; i++) {
        if (support.count(Word7(i))) {
            CHECK(std::abs(one.amplitude(i) - cdouble{kInvSqrt8}) < 1e-12);
        } else {
            CHECK(std::abs(one.amplitude(i)) < 1e-12);
        }
    }
}

TEST_CASE("encoded plus covers all 16 codewords at amplitude 1/4") {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    DenseState plus = encode_ideal(inv_sqrt2, inv_sqrt2);
    for (Word7 w : hamming().codewords()) {
        CHECK(std::abs(plus.amplitude(w) - cdouble{0.25}) < 1e-12);
    }
}

TEST_CASE("non-normalized amplitudes are rejected") {
    CHECK_THROWS_AS(encode_ideal(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("encoding circuit reproduces the ideal amplitudes") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    DenseState circuit_state = run_ideal(encoding_circuit(7, block), 7);
    CHECK(DenseState::fidelity(circuit_state, encode_ideal(0)) == doctest::Approx(1.0).epsilon(1e-12));
    DenseState one_state = run_ideal(encoding_circuit_for_input(7, block, LogicalInput::one), 7);
    CHECK(DenseState::fidelity(one_state, encode_ideal(1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("stabilizer generators fix the codespace") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    auto gens = stabilizer_generators(7, block);
    REQUIRE(gens.size() == 6);
    for (const DenseState& encoded : {encode_ideal(0), encode_ideal(1), prepare_magic_ideal()}) {
        for (const auto& g : gens) {
            DenseState copy = encoded;
            copy.apply_pauli(g);
            cdouble overlap = DenseState::inner_product(encoded, copy);
            CHECK(std::abs(overlap - cdouble{1.0}) < 1e-12);
        }
    }
}

TEST_CASE("logical Z has eigenvalue +1 on zero and -1 on one") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    auto zbar = logical_z(7, block);
    DenseState zero = encode_ideal(0);
    zero.apply_pauli(zbar);
    CHECK(std::abs(DenseState::inner_product(encode_ideal(0), zero) - cdouble{1.0}) < 1e-12);
    DenseState one = encode_ideal(1);
    one.apply_pauli(zbar);
    CHECK(std::abs(DenseState::inner_product(encode_ideal(1), one) - cdouble{-1.0}) < 1e-12);
}

TEST_CASE("weight-3 logical representatives act identically on the codespace") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    CHECK(logical_x_weight3(7, block).weight() == 3);
    DenseState a = encode_ideal(0);
    a.apply_pauli(logical_x(7, block));
    DenseState b = encode_ideal(0);
    b.apply_pauli(logical_x_weight3(7, block));
    CHECK(DenseState::fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(DenseState::fidelity(a, encode_ideal(1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generator commutation structure via the symplectic product") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    auto gens = stabilizer_generators(7, block);
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = 0; j < gens.size(); j++) {
            CHECK(gens[i].commutes_with(gens[j]));
        }
    }
    // X-type and Z-type on identical supports overlap evenly.
    for (int r = 0; r < 3; r++) {
        CHECK(gens[r].commutes_with(gens[3 + r]));
    }
    auto xbar = logical_x(7, block);
    auto zbar = logical_z(7, block);
    for (const auto& g : gens) {
        CHECK(g.commutes_with(xbar));
        CHECK(g.commutes_with(zbar));
    }
    CHECK(!xbar.commutes_with(zbar));
}

TEST_CASE("transversal Hadamard is the logical Hadamard") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    SimState s(BackendKind::dense, 7);
    Rng rng(3);
    ideal_encode(s, block, LogicalInput::zero, rng);
    ShotRecord rec;
    execute_circuit(s, logical_gate_circuit(7, LogicalGate{LogicalGateKind::H, block, {}}),
                    NoiseModel::none(), rng, rec);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    CHECK(DenseState::fidelity(s.dense(), encode_ideal(inv_sqrt2, inv_sqrt2)) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("transversal CNOT copies logical one onto logical zero") {
    SteaneBlock control = SteaneBlock::contiguous(0, 0);
    SteaneBlock target = SteaneBlock::contiguous(7, 1);
    SimState s(BackendKind::dense, 14);
    Rng rng(5);
    ideal_encode(s, control, LogicalInput::one, rng);
    ideal_encode(s, target, LogicalInput::zero, rng);
    ShotRecord rec;
    execute_circuit(s, logical_gate_circuit(14, LogicalGate{LogicalGateKind::CNOT, control, target}),
                    NoiseModel::none(), rng, rec);
    DenseState expected = encode_logical_pair({0, 0, 0, 1});  // |1>|1>
    CHECK(DenseState::fidelity(s.dense(), expected) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("transversal S_DAG is the logical S: golden sign convention") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    SimState s(BackendKind::dense, 7);
    Rng rng(7);
    ideal_encode(s, block, LogicalInput::plus, rng);
    ShotRecord rec;
    execute_circuit(s, logical_gate_circuit(7, LogicalGate{LogicalGateKind::S, block, {}}),
                    NoiseModel::none(), rng, rec);
    // S|+> = (|0> + i|1>)/sqrt(2); the transversal gate that realizes it is
    // S_DAG on each qubit.
    DenseState expected = encode_ideal(inv_sqrt2, cdouble{0, inv_sqrt2});
    CHECK(DenseState::fidelity(s.dense(), expected) == doctest::Approx(1.0).epsilon(1e-10));
    // And twice gives the logical Z.
    execute_circuit(s, logical_gate_circuit(7, LogicalGate{LogicalGateKind::S, block, {}}),
                    NoiseModel::none(), rng, rec);
    DenseState z_plus = encode_ideal(inv_sqrt2, cdouble{-inv_sqrt2});
    CHECK(DenseState::fidelity(s.dense(), z_plus) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("emitted logical circuits are structurally transversal") {
    SteaneBlock a = SteaneBlock::contiguous(0, 0);
    SteaneBlock b = SteaneBlock::contiguous(7, 1);
    std::vector<SteaneBlock> blocks = {a, b};
    for (auto kind : {LogicalGateKind::X, LogicalGateKind::Y, LogicalGateKind::Z,
                      LogicalGateKind::H, LogicalGateKind::S}) {
        CHECK(testing::is_transversal(logical_gate_circuit(14, LogicalGate{kind, a, {}}), blocks));
    }
    CHECK(testing::is_transversal(logical_gate_circuit(14, LogicalGate{LogicalGateKind::CNOT, a, b}),
                                  blocks));
}

TEST_CASE("logical T is rejected by the transversal layer") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    CHECK_THROWS_AS(logical_gate_circuit(7, LogicalGate{LogicalGateKind::T, block, {}}),
                    std::invalid_argument);
}

TEST_CASE("random transversal Clifford words match ideal logical action") {
    SteaneBlock blocks[2] = {SteaneBlock::contiguous(0, 0), SteaneBlock::contiguous(7, 1)};
    Rng rng(11);
    for (int word = 0; word < 30; word++) {
        SimState encoded(BackendKind::dense, 14);
        ideal_encode(encoded, blocks[0], LogicalInput::zero, rng);
        ideal_encode(encoded, blocks[1], LogicalInput::zero, rng);
        SimState ideal(BackendKind::dense, 2);
        ShotRecord rec;
        for (int g = 0; g < 20; g++) {
            int pick = int(rng.below(3));
            int which = int(rng.below(2));
            if (pick == 0) {
                execute_circuit(encoded,
                                logical_gate_circuit(
                                    14, LogicalGate{LogicalGateKind::H, blocks[which], {}}),
                                NoiseModel::none(), rng, rec);
                ideal.apply_gate(GateKind::H, uint32_t(which));
            } else if (pick == 1) {
                execute_circuit(encoded,
                                logical_gate_circuit(
                                    14, LogicalGate{LogicalGateKind::S, blocks[which], {}}),
                                NoiseModel::none(), rng, rec);
                ideal.apply_gate(GateKind::S, uint32_t(which));
            } else {
                execute_circuit(encoded,
                                logical_gate_circuit(14, LogicalGate{LogicalGateKind::CNOT,
                                                                     blocks[which],
                                                                     blocks[1 - which]}),
                                NoiseModel::none(), rng, rec);
                ideal.apply_gate(GateKind::CNOT, uint32_t(which), uint32_t(1 - which));
            }
        }
        std::array<cdouble, 4> logical;
        for (int k = 0; k < 4; k++) {
            logical[k] = ideal.dense().amplitude(k);
        }
        DenseState expected = encode_logical_pair(logical);
        REQUIRE(DenseState::fidelity(encoded.dense(), expected) >= 1.0 - 1e-9);
    }
}

TEST_CASE("destructive measurement of encoded zero: uniform even codewords") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    std::map<Word7, uint64_t> tally;
    const int shots = 10000;
    for (int shot = 0; shot < shots; shot++) {
        SimState s(BackendKind::tableau, 7);
        Rng rng = Rng::for_shot(13, shot);
        ideal_encode(s, block, LogicalInput::zero, rng);
        auto m = measure_logical_destructive(s, block, 'Z', rng);
        CHECK(m.logical_bit == 0);
        CHECK(m.corrected_position == 0);
        tally[m.raw_word]++;
    }
    REQUIRE(tally.size() == 8);
    std::vector<uint64_t> observed;
    for (auto& [w, count] : tally) {
        CHECK(hamming().is_codeword(w));
        observed.push_back(count);
    }
    auto chi = chi2_goodness_of_fit(observed, std::vector<double>(8, 1.0 / 8));
    CHECK(chi.p_value > 0.001);
}

TEST_CASE("single bit flip is corrected with its position reported") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    for (int pos = 1; pos <= 7; pos++) {
        SimState s(BackendKind::tableau, 7);
        Rng rng = Rng::for_shot(17, uint64_t(pos));
        ideal_encode(s, block, LogicalInput::one, rng);
        s.apply_pauli(PauliOperator::single(7, block.qubit(pos), 'X'));
        auto m = measure_logical_destructive(s, block, 'Z', rng);
        CHECK(m.logical_bit == 1);
        CHECK(m.corrected_position == pos);
    }
}

TEST_CASE("all 21 single-qubit Paulis leave destructive readout correct") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    for (int bit = 0; bit < 2; bit++) {
        for (int pos = 1; pos <= 7; pos++) {
            for (char kind : {'X', 'Y', 'Z'}) {
                SimState s(BackendKind::tableau, 7);
                Rng rng = Rng::for_shot(19, uint64_t(16 * pos + bit * 4 + kind % 4));
                ideal_encode(s, block, bit ? LogicalInput::one : LogicalInput::zero, rng);
                s.apply_pauli(PauliOperator::single(7, block.qubit(pos), kind));
                auto m = measure_logical_destructive(s, block, 'Z', rng);
                CHECK(m.logical_bit == bit);
            }
        }
    }
}

TEST_CASE("superposition input gives a fair logical coin") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    uint64_t ones = 0;
    const int shots = 10000;
    for (int shot = 0; shot < shots; shot++) {
        SimState s(BackendKind::tableau, 7);
        Rng rng = Rng::for_shot(23, shot);
        ideal_encode(s, block, LogicalInput::plus, rng);
        ones += uint64_t(measure_logical_destructive(s, block, 'Z', rng).logical_bit);
    }
    double sigma = std::sqrt(0.25 / shots);
    CHECK(std::abs(double(ones) / shots - 0.5) < 3 * sigma);
}

TEST_CASE("a weight-2 X error flips the decoded logical value") {
    // Distance 3: two flips decode to the wrong parity class. Expected,
    // documented failure mode.
    SteaneBlock block = SteaneBlock::contiguous(0);
    SimState s(BackendKind::tableau, 7);
    Rng rng(29);
    ideal_encode(s, block, LogicalInput::zero, rng);
    s.apply_pauli(PauliOperator::single(7, block.qubit(1), 'X') *
                  PauliOperator::single(7, block.qubit(2), 'X'));
    auto m = measure_logical_destructive(s, block, 'Z', rng);
    CHECK(m.logical_bit == 1);
}

TEST_CASE("tableau and dense agree on encoded readout distributions") {
    SteaneBlock block = SteaneBlock::contiguous(0);
    std::map<std::string, uint64_t> tallies[2];
    const int shots = 4000;
    for (int which = 0; which < 2; which++) {
        for (int shot = 0; shot < shots; shot++) {
            SimState s(which ? BackendKind::dense : BackendKind::tableau, 7);
            Rng rng = Rng::for_shot(31 + which, shot);
            ideal_encode(s, block, LogicalInput::plus, rng);
            auto m = measure_logical_destructive(s, block, 'Z', rng);
            tallies[which][word_to_string(m.raw_word)]++;
        }
    }
    auto chi = chi2_two_sample(tallies[0], tallies[1]);
    CHECK(chi.p_value > 0.001);
}
