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

#include "ftlab/gadgets.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ftlab {

std::string GadgetReport::to_json_line() const {
    std::ostringstream out;
    out << "{\"gadget\":\"" << gadget << "\",\"ancillas\":" << ancilla_blocks_consumed
        << ",\"attempts\":" << preparation_attempts << ",\"syndromes\":[";
    for (size_t i = 0; i < syndromes.size(); i++) {
        const SyndromeRecord& s = syndromes[i];
        if (i) {
            out << ",";
        }
        std::string bits = {char('0' + (s.syndrome & 1)), char('0' + ((s.syndrome >> 1) & 1)),
                            char('0' + ((s.syndrome >> 2) & 1))};
        out << "{\"type\":\"" << s.basis << "\",\"syndrome\":\"" << bits << "\",\"correction\":";
        if (s.correction) {
            out << s.correction;
        } else {
            out << "null";
        }
        out << "}";
    }
    out << "]}";
    return out.str();
}

namespace {

Circuit reset_block_circuit(uint32_t n, const SteaneBlock& block) {
    Circuit c(n);
    c.begin_step();
    for (int pos = 1; pos <= 7; pos++) {
        c.append(Location(GateKind::PREP_ZERO, block.qubit(pos)));
    }
    return c;
}

Circuit measure_block_circuit(uint32_t n, const SteaneBlock& block, GateKind basis) {
    Circuit c(n);
    c.begin_step();
    for (int pos = 1; pos <= 7; pos++) {
        c.append(Location(basis, block.qubit(pos)));
    }
    return c;
}

}  // namespace

SteaneGadgets::SteaneGadgets(uint32_t n, const SteaneBlock& data, const SteaneBlock& ancilla,
                             std::optional<SteaneBlock> partner)
    : n_(n), data_(data), ancilla_(ancilla), partner_(partner) {
    if (partner_) {
        // Two-copy preparation: reset both blocks, encode them in parallel,
        // compare with a transversal CNOT, read the partner out.
        prep_pair_ = reset_block_circuit(n, ancilla_);
        prep_pair_.merge_parallel(reset_block_circuit(n, *partner_));
        Circuit encode_both = encoding_circuit(n, ancilla_);
        encode_both.merge_parallel(encoding_circuit(n, *partner_));
        prep_pair_.extend(encode_both);
        prep_pair_.extend(
            logical_gate_circuit(n, LogicalGate{LogicalGateKind::CNOT, ancilla_, *partner_}));
        prep_pair_.extend(measure_block_circuit(n, *partner_, GateKind::MEASURE_Z));
    }

    rotate_plus_ = logical_gate_circuit(n, LogicalGate{LogicalGateKind::H, ancilla_, {}});

    ideal_prep_zero_ = reset_block_circuit(n, ancilla_);
    ideal_prep_zero_.extend(encoding_circuit(n, ancilla_));

    extract_x_ = logical_gate_circuit(n, LogicalGate{LogicalGateKind::CNOT, data_, ancilla_});
    extract_x_.extend(measure_block_circuit(n, ancilla_, GateKind::MEASURE_Z));

    extract_z_ = logical_gate_circuit(n, LogicalGate{LogicalGateKind::CNOT, ancilla_, data_});
    extract_z_.extend(measure_block_circuit(n, ancilla_, GateKind::MEASURE_X));

    for (int pos = 1; pos <= 7; pos++) {
        correct_x_[pos] = Circuit(n);
        correct_x_[pos].append_step(Location(GateKind::X, data_.qubit(pos)));
        correct_z_[pos] = Circuit(n);
        correct_z_[pos].append_step(Location(GateKind::Z, data_.qubit(pos)));
    }
}

Word7 SteaneGadgets::run_and_read_word(SimState& state, const Circuit& measured,
                                       const NoiseModel& noise, Rng& rng,
                                       GadgetTrace* trace) const {
    ShotRecord record;
    RunOptions options;
    options.log_errors = false;
    execute_circuit(state, measured, noise, rng, record, options);
    if (trace) {
        trace->push_back(measured);
    }
    Word7 w = 0;
    size_t first = record.outcomes.size() - 7;
    for (int i = 0; i < 7; i++) {
        w |= Word7((record.outcomes[first + i] & 1) << i);
    }
    return w;
}

SteaneGadgets::VerificationAttempt SteaneGadgets::run_verification_attempt(
    SimState& state, const NoiseModel& noise, Rng& rng, const RunOptions& run_options,
    GadgetTrace* trace) const {
    if (!partner_) {
        throw ConfigError("verified preparation needs a partner block");
    }
    ShotRecord record;
    execute_circuit(state, prep_pair_, noise, rng, record, run_options);
    if (trace) {
        trace->push_back(prep_pair_);
    }
    Word7 raw = 0;
    size_t first = record.outcomes.size() - 7;
    for (int i = 0; i < 7; i++) {
        raw |= Word7((record.outcomes[first + i] & 1) << i);
    }
    auto fix = hamming().correct(raw);
    // A 7-bit word is always within one flip of a codeword, so the
    // corrected logical parity is the entire acceptance predicate.
    bool accepted = hamming().codeword_parity(fix.corrected) == 0;
    return VerificationAttempt{accepted, raw, fix.corrected, fix.flipped_position};
}

PreparationOutcome SteaneGadgets::prepare_verified_impl(SimState& state, const NoiseModel& noise,
                                                        Rng& rng, int max_retries, bool plus,
                                                        GadgetReport* report, GadgetTrace* trace) const {
    if (max_retries < 1) {
        throw std::invalid_argument("max_retries must be at least 1");
    }
    PreparationOutcome outcome;
    for (int attempt = 1; attempt <= max_retries; attempt++) {
        outcome.attempts = attempt;
        if (report) {
            report->ancilla_blocks_consumed += 2;
            report->preparation_attempts++;
        }
        if (run_verification_attempt(state, noise, rng, {}, trace).accepted) {
            if (plus) {
                ShotRecord scratch;
                execute_circuit(state, rotate_plus_, noise, rng, scratch);
                if (trace) {
                    trace->push_back(rotate_plus_);
                }
            }
            outcome.accepted = true;
            outcome.block = ancilla_;
            return outcome;
        }
    }
    outcome.accepted = false;
    outcome.block.reset();
    return outcome;
}

PreparationOutcome SteaneGadgets::prepare_zero_verified(SimState& state, const NoiseModel& noise,
                                                        Rng& rng, int max_retries,
                                                        GadgetReport* report, GadgetTrace* trace) const {
    return prepare_verified_impl(state, noise, rng, max_retries, false, report, trace);
}

PreparationOutcome SteaneGadgets::prepare_plus_verified(SimState& state, const NoiseModel& noise,
                                                        Rng& rng, int max_retries,
                                                        GadgetReport* report, GadgetTrace* trace) const {
    return prepare_verified_impl(state, noise, rng, max_retries, true, report, trace);
}

void SteaneGadgets::prepare_ancilla_ideal(SimState& state, LogicalInput input, Rng& rng) const {
    ShotRecord scratch;
    execute_circuit(state, ideal_prep_zero_, NoiseModel::none(), rng, scratch);
    if (input == LogicalInput::plus) {
        execute_circuit(state, rotate_plus_, NoiseModel::none(), rng, scratch);
    } else if (input == LogicalInput::one) {
        Circuit flip = logical_gate_circuit(n_, LogicalGate{LogicalGateKind::X, ancilla_, {}});
        execute_circuit(state, flip, NoiseModel::none(), rng, scratch);
    }
}

SteaneBlock SteaneGadgets::obtain_ancilla(SimState& state, LogicalInput input,
                                          const NoiseModel& noise, Rng& rng,
                                          const GadgetOptions& options, GadgetReport& report,
                                          GadgetTrace* trace) const {
    if (options.ancilla == AncillaMode::ideal) {
        prepare_ancilla_ideal(state, input, rng);
        report.ancilla_blocks_consumed += 1;
        return ancilla_;
    }
    PreparationOutcome prep =
        input == LogicalInput::plus
            ? prepare_plus_verified(state, noise, rng, options.max_retries, &report, trace)
            : prepare_zero_verified(state, noise, rng, options.max_retries, &report, trace);
    if (!prep.accepted) {
        throw AncillaExhausted("verified ancilla preparation failed " +
                               std::to_string(options.max_retries) + " times");
    }
    return *prep.block;
}

GadgetReport SteaneGadgets::ec_round(SimState& state, const NoiseModel& noise, Rng& rng,
                                     const GadgetOptions& options, GadgetTrace* trace) const {
    GadgetReport report;
    report.gadget = "ec_round";

    // X-error extraction: data X faults copy onto a |+_L> ancilla and show
    // up as bit flips on a random codeword.
    obtain_ancilla(state, LogicalInput::plus, noise, rng, options, report, trace);
    Word7 raw_x = run_and_read_word(state, extract_x_, noise, rng, trace);
    uint8_t syndrome_x = hamming().syndrome(raw_x);
    int pos_x = hamming().syndrome_position(syndrome_x);
    report.syndromes.push_back(SyndromeRecord{'X', syndrome_x, pos_x, raw_x});
    if (pos_x) {
        ShotRecord scratch;
        execute_circuit(state, correct_x_[pos_x], noise, rng, scratch);
        if (trace) {
            trace->push_back(correct_x_[pos_x]);
        }
    }

    // Z-error extraction: data Z faults copy onto a |0_L> ancilla read in
    // the Hadamard basis. The logical data stays untouched either way.
    obtain_ancilla(state, LogicalInput::zero, noise, rng, options, report, trace);
    Word7 raw_z = run_and_read_word(state, extract_z_, noise, rng, trace);
    uint8_t syndrome_z = hamming().syndrome(raw_z);
    int pos_z = hamming().syndrome_position(syndrome_z);
    report.syndromes.push_back(SyndromeRecord{'Z', syndrome_z, pos_z, raw_z});
    if (pos_z) {
        ShotRecord scratch;
        execute_circuit(state, correct_z_[pos_z], noise, rng, scratch);
        if (trace) {
            trace->push_back(correct_z_[pos_z]);
        }
    }
    return report;
}

std::pair<int, GadgetReport> SteaneGadgets::measure_logical_nondemolition(
    SimState& state, const NoiseModel& noise, Rng& rng, const GadgetOptions& options,
    GadgetTrace* trace) const {
    GadgetReport report;
    report.gadget = "measure_nondemolition";
    obtain_ancilla(state, LogicalInput::zero, noise, rng, options, report, trace);
    Word7 raw = run_and_read_word(state, extract_x_, noise, rng, trace);
    auto fix = hamming().correct(raw);
    report.syndromes.push_back(
        SyndromeRecord{'X', hamming().syndrome(raw), fix.flipped_position, raw});
    return {hamming().codeword_parity(fix.corrected), report};
}

uint64_t SteaneGadgets::ec_circuit_hash() const {
    // Nominal round: one accepted preparation per stage, no corrections.
    uint64_t h = partner_ ? fnv1a64(prep_pair_.str()) : fnv1a64(ideal_prep_zero_.str());
    h = fnv1a64(rotate_plus_.str(), h);
    h = fnv1a64(extract_x_.str(), h);
    h = fnv1a64(extract_z_.str(), h);
    return h;
}

std::vector<Circuit> SteaneGadgets::circuit_pieces() const {
    std::vector<Circuit> pieces = {rotate_plus_, ideal_prep_zero_, extract_x_, extract_z_};
    if (partner_) {
        pieces.push_back(prep_pair_);
    }
    for (int pos = 1; pos <= 7; pos++) {
        pieces.push_back(correct_x_[pos]);
        pieces.push_back(correct_z_[pos]);
    }
    return pieces;
}

DenseState prepare_magic_ideal() {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return encode_ideal(inv_sqrt2, std::polar(inv_sqrt2, std::numbers::pi / 4));
}

void inject_magic_ideal(DenseState& state, const SteaneBlock& block) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    inject_encoded(state, block, inv_sqrt2, std::polar(inv_sqrt2, std::numbers::pi / 4));
}

std::pair<int, GadgetReport> logical_t_gadget(SimState& state, const SteaneBlock& data,
                                              const SteaneBlock& magic, Rng& rng,
                                              GadgetTrace* trace) {
    if (state.kind() != BackendKind::dense) {
        throw ConfigError("the teleported pi/8 gate needs the dense backend");
    }
    GadgetReport report;
    report.gadget = "t_gadget";
    report.ancilla_blocks_consumed = 1;
    const uint32_t n = state.num_qubits();

    Circuit entangle = logical_gate_circuit(n, LogicalGate{LogicalGateKind::CNOT, data, magic});
    ShotRecord record;
    execute_circuit(state, entangle, NoiseModel::none(), rng, record);
    Circuit readout = Circuit(n);
    readout.begin_step();
    for (int pos = 1; pos <= 7; pos++) {
        readout.append(Location(GateKind::MEASURE_Z, magic.qubit(pos)));
    }
    execute_circuit(state, readout, NoiseModel::none(), rng, record);
    if (trace) {
        trace->push_back(entangle);
        trace->push_back(readout);
    }
    Word7 raw = 0;
    for (int i = 0; i < 7; i++) {
        raw |= Word7((record.outcomes[i] & 1) << i);
    }
    auto fix = hamming().correct(raw);
    int bit = hamming().codeword_parity(fix.corrected);
    report.syndromes.push_back(
        SyndromeRecord{'X', hamming().syndrome(raw), fix.flipped_position, raw});

    if (bit == 1) {
        // The measured branch holds T^dag of the input; one logical S fixes it.
        Circuit fixup = logical_gate_circuit(n, LogicalGate{LogicalGateKind::S, data, {}});
        ShotRecord scratch;
        execute_circuit(state, fixup, NoiseModel::none(), rng, scratch);
        if (trace) {
            trace->push_back(fixup);
        }
    }
    return {bit, report};
}

}  // namespace ftlab
