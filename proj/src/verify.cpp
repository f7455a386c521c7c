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

#include "ftlab/verify.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "ftlab/gadgets.hpp"
#include "ftlab/pauli_decompose.hpp"
#include "ftlab/threshold.hpp"

namespace ftlab {

namespace {

constexpr double kInvSqrt2Const = 0.7071067811865475244;

class Checker {
  public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        result_.checks++;
        if (!ok) {
            result_.passed = false;
            result_.failures.push_back(what);
        }
    }

    void check_near(double value, double expect, double tol, const std::string& what) {
        std::ostringstream detail;
        detail << what << " (got " << value << ", want " << expect << ")";
        check(std::abs(value - expect) <= tol, detail.str());
    }

    SuiteResult result() { return result_; }

  private:
    SuiteResult result_;
};

/// Overlap of the 7-qubit block starting at qubit 0 with the encoded state
/// (alpha, beta), traced over the rest of the register.
double block_overlap(const DenseState& state, std::complex<double> alpha,
                     std::complex<double> beta) {
    DenseState target = encode_ideal(alpha, beta);
    double fid = 0;
    const auto& amps = state.amplitudes();
    for (uint64_t env = 0; env < amps.size() >> 7; env++) {
        std::complex<double> overlap{};
        for (uint64_t w = 0; w < 128; w++) {
            overlap += std::conj(target.amplitude(w)) * amps[(env << 7) | w];
        }
        fid += std::norm(overlap);
    }
    return fid;
}

const char* kEvenWords[] = {"0000000", "1111000", "1100110", "1010101",
                            "0011110", "0101101", "0110011", "1001011"};
const char* kOddWords[] = {"1111111", "0000111", "0011001", "0101010",
                           "1100001", "1010010", "1001100", "0110100"};

}  // namespace

SuiteResult verify_pauli_suite() {
    Checker c("pauli");
    // Golden single-qubit product table: every pair of I/X/Y/Z.
    const char* names = "IXYZ";
    // Expected phase exponent (power of i) and resulting letter.
    // Row-major: lhs * rhs.
    const struct {
        char result;
        int phase;
    } table[4][4] = {
        {{'I', 0}, {'X', 0}, {'Y', 0}, {'Z', 0}},
        {{'X', 0}, {'I', 0}, {'Z', 1}, {'Y', 3}},
        {{'Y', 0}, {'Z', 3}, {'I', 0}, {'X', 1}},
        {{'Z', 0}, {'Y', 1}, {'X', 3}, {'I', 0}},
    };
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            auto lhs = PauliOperator::single(1, 0, names[a]);
            auto rhs = PauliOperator::single(1, 0, names[b]);
            auto product = lhs * rhs;
            auto expect = PauliOperator::single(1, 0, table[a][b].result);
            expect.set_phase(expect.phase() + table[a][b].phase);
            std::ostringstream what;
            what << names[a] << "*" << names[b] << " = i^" << table[a][b].phase
                 << table[a][b].result;
            c.check(product == expect, what.str());
        }
    }
    // Inverse and weight behavior on random operators.
    Rng rng(2024);
    for (int trial = 0; trial < 200; trial++) {
        PauliOperator a(6), b(6);
        for (size_t q = 0; q < 6; q++) {
            a.set_x(q, rng.coin());
            a.set_z(q, rng.coin());
            b.set_x(q, rng.coin());
            b.set_z(q, rng.coin());
        }
        c.check((a * b) * b.inverse() == a, "product-inverse cancellation");
        c.check((a * b).weight() <= a.weight() + b.weight(), "weight subadditivity");
    }
    // Decomposition goldens.
    auto d = pauli_decompose(rz_matrix(0.2));
    c.check_near(std::abs(d.alpha - std::polar(1.0, 0.1) * std::cos(0.1)), 0, 1e-14,
                 "rz alpha coefficient");
    c.check_near(std::norm(d.beta) + std::norm(d.gamma), 0, 1e-24, "rz off-axis coefficients");
    c.check_near(d.norm_squared(), 1.0, 1e-12, "unitary coefficient norm");
    return c.result();
}

SuiteResult verify_hamming_suite() {
    Checker c("hamming");
    std::set<Word7> even, odd;
    for (const char* w : kEvenWords) {
        even.insert(word_from_string(w));
    }
    for (const char* w : kOddWords) {
        odd.insert(word_from_string(w));
    }
    const HammingCode& code = hamming();
    c.check(std::set<Word7>(code.even_codewords().begin(), code.even_codewords().end()) == even,
            "even codeword table");
    c.check(std::set<Word7>(code.odd_codewords().begin(), code.odd_codewords().end()) == odd,
            "odd codeword table");
    for (int w = 0; w < 128; w++) {
        Word7 word = Word7(w);
        bool in_code = even.count(word) || odd.count(word);
        c.check((code.syndrome(word) == 0) == in_code,
                "syndrome zero exactly on codewords: " + word_to_string(word));
        auto fix = code.correct(word);
        c.check(code.is_codeword(fix.corrected), "correction lands on a codeword");
    }
    for (Word7 cw : code.codewords()) {
        for (int pos = 1; pos <= 7; pos++) {
            auto fix = code.correct(Word7(cw ^ (1 << (pos - 1))));
            c.check(fix.corrected == cw && fix.flipped_position == pos,
                    "single flips decode to position");
        }
    }
    return c.result();
}

SuiteResult verify_codeword_suite() {
    Checker c("codewords");
    DenseState zero = encode_ideal(0);
    DenseState one = encode_ideal(1);
    const double amp = 1.0 / std::sqrt(8.0);
    for (uint64_t i = 0; i < 128; i++) {
        bool in_even = false, in_odd = false;
        for (const char* w : kEvenWords) {
            in_even |= word_from_string(w) == Word7(i);
        }
        for (const char* w : kOddWords) {
            in_odd |= word_from_string(w) == Word7(i);
        }
        double expect_zero = in_even ? amp : 0.0;
        double expect_one = in_odd ? amp : 0.0;
        c.check(std::abs(zero.amplitude(i) - expect_zero) < 1e-12, "logical zero amplitude");
        c.check(std::abs(one.amplitude(i) - expect_one) < 1e-12, "logical one amplitude");
    }
    // The preparation circuit reproduces the same state.
    SimState s(BackendKind::dense, 7);
    Rng rng(11);
    ideal_encode(s, SteaneBlock::contiguous(0), LogicalInput::zero, rng);
    c.check_near(DenseState::fidelity(s.dense(), zero), 1.0, 1e-12,
                 "encoding circuit matches the amplitude construction");
    return c.result();
}

SuiteResult verify_transversal_suite(SGateConvention convention) {
    Checker c("transversal");
    const SteaneBlock block = SteaneBlock::contiguous(0);
    Rng rng(13);
    const std::complex<double> i_unit{0, 1};

    auto apply_word = [&](SimState& s, GateKind phys) {
        Circuit circuit(7);
        circuit.begin_step();
        for (int pos = 1; pos <= 7; pos++) {
            circuit.append(Location(phys, block.qubit(pos)));
        }
        ShotRecord rec;
        execute_circuit(s, circuit, NoiseModel::none(), rng, rec);
    };

    // H_L on |0_L> gives |+_L>.
    {
        SimState s(BackendKind::dense, 7);
        ideal_encode(s, block, LogicalInput::zero, rng);
        apply_word(s, GateKind::H);
        c.check_near(DenseState::fidelity(s.dense(), encode_ideal(kInvSqrt2Const, kInvSqrt2Const)),
                     1.0, 1e-10, "transversal H acts as logical H");
    }
    // The S convention: the -pi/4 per-qubit rotation must send |+_L> to
    // (|0_L> + i|1_L>)/sqrt(2).
    {
        SimState s(BackendKind::dense, 7);
        ideal_encode(s, block, LogicalInput::plus, rng);
        apply_word(s, convention == SGateConvention::transversal_s_dag ? GateKind::S_DAG
                                                                       : GateKind::S);
        c.check_near(
            DenseState::fidelity(s.dense(), encode_ideal(kInvSqrt2Const, i_unit * kInvSqrt2Const)),
            1.0, 1e-10, "logical S sign convention");
    }
    // X_L, Y_L, Z_L act as the corresponding logical Paulis.
    {
        SimState s(BackendKind::dense, 7);
        ideal_encode(s, block, LogicalInput::zero, rng);
        apply_word(s, GateKind::X);
        c.check_near(DenseState::fidelity(s.dense(), encode_ideal(1)), 1.0, 1e-10,
                     "transversal X flips the logical qubit");
        apply_word(s, GateKind::Y);
        c.check_near(DenseState::fidelity(s.dense(), encode_ideal(0)), 1.0, 1e-10,
                     "transversal Y returns to logical zero up to phase");
    }
    {
        SimState s(BackendKind::dense, 7);
        ideal_encode(s, block, LogicalInput::plus, rng);
        apply_word(s, GateKind::Z);
        c.check_near(DenseState::fidelity(s.dense(), encode_ideal(kInvSqrt2Const, -kInvSqrt2Const)),
                     1.0, 1e-10, "transversal Z flips the logical phase");
    }
    // Transversal CNOT: |1_L>|0_L> -> |1_L>|1_L>.
    {
        SimState s(BackendKind::dense, 14);
        SteaneBlock control = SteaneBlock::contiguous(0, 0);
        SteaneBlock target = SteaneBlock::contiguous(7, 1);
        ideal_encode(s, control, LogicalInput::one, rng);
        ideal_encode(s, target, LogicalInput::zero, rng);
        ShotRecord rec;
        execute_circuit(s,
                        logical_gate_circuit(14, LogicalGate{LogicalGateKind::CNOT, control, target}),
                        NoiseModel::none(), rng, rec);
        auto m1 = measure_logical_destructive(s, control, 'Z', rng);
        auto m2 = measure_logical_destructive(s, target, 'Z', rng);
        c.check(m1.logical_bit == 1 && m2.logical_bit == 1, "transversal CNOT copies the bit");
    }
    return c.result();
}

SuiteResult verify_ec_suite() {
    Checker c("ec");
    const SteaneBlock data = SteaneBlock::contiguous(0, 0);
    const SteaneBlock ancilla = SteaneBlock::contiguous(7, 1);
    const SteaneGadgets gadgets(14, data, ancilla);
    GadgetOptions ideal;
    ideal.ancilla = AncillaMode::ideal;
    const std::complex<double> refs[4][2] = {
        {{1, 0}, {0, 0}},
        {{0, 0}, {1, 0}},
        {{kInvSqrt2Const, 0}, {kInvSqrt2Const, 0}},
        {{kInvSqrt2Const, 0}, std::polar(kInvSqrt2Const, std::numbers::pi / 4)},
    };
    for (const auto& ref : refs) {
        for (int pos = 1; pos <= 7; pos++) {
            for (char kind : {'X', 'Y', 'Z'}) {
                SimState s(BackendKind::dense, 14);
                inject_encoded(s.dense(), data, ref[0], ref[1]);
                s.apply_pauli(PauliOperator::single(14, data.qubit(pos), kind));
                Rng rng = Rng::for_shot(17, uint64_t(pos * 4 + kind));
                gadgets.ec_round(s, NoiseModel::none(), rng, ideal);
                std::ostringstream what;
                what << "EC restores " << kind << " at position " << pos;
                c.check_near(block_overlap(s.dense(), ref[0], ref[1]), 1.0, 1e-10, what.str());
            }
        }
    }
    return c.result();
}

SuiteResult verify_preparation_suite() {
    Checker c("preparation");
    const SteaneBlock data = SteaneBlock::contiguous(0, 0);
    const SteaneBlock ancilla = SteaneBlock::contiguous(7, 1);
    const SteaneBlock partner = SteaneBlock::contiguous(14, 2);
    const SteaneGadgets gadgets(21, data, ancilla, partner);
    const SteaneGadgets referee(21, ancilla, data);
    GadgetOptions ideal;
    ideal.ancilla = AncillaMode::ideal;

    // Exhaustive single-fault injection over every site and Pauli type.
    NoiseSiteTable sites = enumerate_noise_sites(gadgets.preparation_circuit());
    for (size_t ord = 0; ord < sites.size(); ord++) {
        const NoiseSite& site = sites.sites[ord];
        if (!site.idle && is_measurement(site.location.gate)) {
            continue;
        }
        int choices = (site.idle || !is_two_qubit(site.location.gate)) ? 3 : 15;
        for (int choice = 0; choice < choices; choice++) {
            PauliOperator fault =
                choices == 3 ? PauliOperator::single(21, site.location.q0, "XYZ"[choice])
                             : two_qubit_pauli_by_index(21, site.location.q0, site.location.q1,
                                                        choice);
            std::map<size_t, PauliOperator> script{{ord, fault}};
            RunOptions options;
            options.scripted = &script;
            SimState s(BackendKind::tableau, 21);
            Rng rng = Rng::for_shot(19, ord);
            auto attempt = gadgets.run_verification_attempt(s, NoiseModel::none(), rng, options);
            if (!attempt.accepted) {
                c.check(true, "");
                continue;
            }
            referee.ec_round(s, NoiseModel::none(), rng, ideal);
            auto m = measure_logical_destructive(s, ancilla, 'Z', rng);
            std::ostringstream what;
            what << "single fault at site " << ord << " choice " << choice
                 << " accepted a flipped block";
            c.check(m.logical_bit == 0, what.str());
        }
    }

    // The documented two-fault fooling case must still fool the check.
    size_t compare_site = 0;
    for (size_t i = 0; i < sites.size(); i++) {
        const NoiseSite& site = sites.sites[i];
        if (!site.idle && site.location.gate == GateKind::CNOT &&
            site.location.q0 == ancilla.qubit(1) && site.location.q1 == partner.qubit(1)) {
            compare_site = i;
            break;
        }
    }
    PauliOperator both = logical_x(21, ancilla) * logical_x(21, partner);
    std::map<size_t, PauliOperator> script{{compare_site - 1, both}};
    RunOptions options;
    options.scripted = &script;
    SimState s(BackendKind::tableau, 21);
    Rng rng(23);
    auto attempt = gadgets.run_verification_attempt(s, NoiseModel::none(), rng, options);
    c.check(attempt.accepted, "two-copy flip is (expectedly) accepted");
    auto m = measure_logical_destructive(s, ancilla, 'Z', rng);
    c.check(m.logical_bit == 1, "two-copy flip leaves a flipped block (expected failure mode)");
    return c.result();
}

SuiteResult verify_tgadget_suite() {
    Checker c("tgadget");
    const SteaneBlock data = SteaneBlock::contiguous(0, 0);
    const SteaneBlock magic = SteaneBlock::contiguous(7, 1);
    bool saw_branch[2] = {false, false};
    for (uint64_t seed = 0; seed < 24; seed++) {
        SimState s(BackendKind::dense, 14);
        inject_encoded(s.dense(), data, kInvSqrt2Const, kInvSqrt2Const);
        inject_magic_ideal(s.dense(), magic);
        Rng rng = Rng::for_shot(29, seed);
        auto [bit, report] = logical_t_gadget(s, data, magic, rng);
        saw_branch[bit] = true;
        std::complex<double> beta = std::polar(kInvSqrt2Const, std::numbers::pi / 4);
        c.check_near(block_overlap(s.dense(), kInvSqrt2Const, beta), 1.0, 1e-9,
                     "teleported gate applies the pi/8 rotation");
    }
    c.check(saw_branch[0] && saw_branch[1], "both measurement branches observed");
    return c.result();
}

SuiteResult verify_recursion_suite() {
    Checker c("recursion");
    Rng rng(31);
    for (int trial = 0; trial < 1000; trial++) {
        double p_threshold = std::exp(std::log(1e-3) + rng.uniform() * std::log(300.0));
        double p = std::min(0.999, p_threshold * std::exp(std::log(0.01) + rng.uniform() * std::log(200.0)));
        int k = int(rng.below(7));
        // concat_project cross-checks closed form vs iterated map itself.
        try {
            concat_project(p, p_threshold, k);
            c.check(true, "");
        } catch (const std::logic_error& e) {
            c.check(false, std::string("recursion mismatch: ") + e.what());
        }
    }
    auto [k, qubits] = levels_for_target(1e-3, 1e-2, 1e-15);
    c.check(k == 4 && qubits == 2401, "level target golden");
    return c.result();
}

std::vector<std::string> verification_suite_names() {
    return {"pauli", "hamming", "codewords", "transversal", "ec", "preparation", "tgadget",
            "recursion"};
}

std::vector<SuiteResult> run_verification_suites(const std::string& only) {
    std::vector<SuiteResult> results;
    auto want = [&](const char* name) { return only.empty() || only == name; };
    if (want("pauli")) {
        results.push_back(verify_pauli_suite());
    }
    if (want("hamming")) {
        results.push_back(verify_hamming_suite());
    }
    if (want("codewords")) {
        results.push_back(verify_codeword_suite());
    }
    if (want("transversal")) {
        results.push_back(verify_transversal_suite());
    }
    if (want("ec")) {
        results.push_back(verify_ec_suite());
    }
    if (want("preparation")) {
        results.push_back(verify_preparation_suite());
    }
    if (want("tgadget")) {
        results.push_back(verify_tgadget_suite());
    }
    if (want("recursion")) {
        results.push_back(verify_recursion_suite());
    }
    if (results.empty()) {
        throw ConfigError("unknown verification suite: \"" + only + "\"");
    }
    return results;
}

}  // namespace ftlab
