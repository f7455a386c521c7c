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

#include "ftlab/concat.hpp"

#include <memory>

namespace ftlab {

namespace {

constexpr uint32_t kN = Level1Layout::kRegister;

using SuperBlock = std::array<SteaneBlock, 7>;

Circuit super_gate_step(const SuperBlock& sb, GateKind g) {
    Circuit c(kN);
    c.begin_step();
    for (const SteaneBlock& b : sb) {
        for (int pos = 1; pos <= 7; pos++) {
            c.append(Location(g, b.qubit(pos)));
        }
    }
    return c;
}

/// Position-wise CNOT between corresponding qubits of two super-blocks.
Circuit super_cnot(const SuperBlock& control, const SuperBlock& target) {
    Circuit c(kN);
    c.begin_step();
    for (int b = 0; b < 7; b++) {
        for (int pos = 1; pos <= 7; pos++) {
            c.append(Location(GateKind::CNOT, control[b].qubit(pos), target[b].qubit(pos)));
        }
    }
    return c;
}

/// Outer encoding: the physical encoding schedule with every gate replaced
/// by its transversal inner-logical construction.
Circuit outer_encoding_circuit(const SuperBlock& sb) {
    const EncodingSchedule& schedule = encoding_schedule();
    Circuit c(kN);
    c.begin_step();
    for (int pivot : schedule.pivots) {
        for (int pos = 1; pos <= 7; pos++) {
            c.append(Location(GateKind::H, sb[pivot - 1].qubit(pos)));
        }
    }
    for (const auto& round : schedule.rounds) {
        c.begin_step();
        for (const auto& [control, target] : round) {
            for (int pos = 1; pos <= 7; pos++) {
                c.append(Location(GateKind::CNOT, sb[control - 1].qubit(pos),
                                  sb[target - 1].qubit(pos)));
            }
        }
    }
    return c;
}

Circuit parallel_inner_encodings(const SuperBlock& sb) {
    Circuit c = encoding_circuit(kN, sb[0]);
    for (int b = 1; b < 7; b++) {
        c.merge_parallel(encoding_circuit(kN, sb[b]));
    }
    return c;
}

}  // namespace

Level1Layout::Level1Layout() {
    uint32_t q = 0;
    for (int b = 0; b < 7; b++, q += 7) {
        data[b] = SteaneBlock::contiguous(q, b);
    }
    for (int b = 0; b < 7; b++, q += 7) {
        outer_ancilla[b] = SteaneBlock::contiguous(q, 7 + b);
    }
    for (int b = 0; b < 7; b++, q += 7) {
        outer_partner[b] = SteaneBlock::contiguous(q, 14 + b);
    }
    inner_ancilla = SteaneBlock::contiguous(q, 21);
    q += 7;
    inner_partner = SteaneBlock::contiguous(q, 22);
}

Level1Gadgets::Level1Gadgets() {
    for (int b = 0; b < 7; b++) {
        data_inner_ec_.emplace_back(kN, layout_.data[b], layout_.inner_ancilla,
                                    layout_.inner_partner);
        ancilla_inner_prep_.emplace_back(kN, layout_.data[0], layout_.outer_ancilla[b],
                                         layout_.inner_partner);
        partner_inner_prep_.emplace_back(kN, layout_.data[0], layout_.outer_partner[b],
                                         layout_.inner_partner);
    }

    reset_outer_ancilla_ = super_gate_step(layout_.outer_ancilla, GateKind::PREP_ZERO);
    outer_encode_single_ = outer_encoding_circuit(layout_.outer_ancilla);
    outer_encode_pair_ = outer_encoding_circuit(layout_.outer_ancilla);
    outer_encode_pair_.merge_parallel(outer_encoding_circuit(layout_.outer_partner));

    outer_verify_ = super_cnot(layout_.outer_ancilla, layout_.outer_partner);
    outer_verify_.extend(super_gate_step(layout_.outer_partner, GateKind::MEASURE_Z));

    rotate_outer_plus_ = super_gate_step(layout_.outer_ancilla, GateKind::H);
    flip_outer_one_ = super_gate_step(layout_.outer_ancilla, GateKind::X);

    outer_extract_x_ = super_cnot(layout_.data, layout_.outer_ancilla);
    outer_extract_x_.extend(super_gate_step(layout_.outer_ancilla, GateKind::MEASURE_Z));
    outer_extract_z_ = super_cnot(layout_.outer_ancilla, layout_.data);
    outer_extract_z_.extend(super_gate_step(layout_.outer_ancilla, GateKind::MEASURE_X));

    for (int pos = 1; pos <= 7; pos++) {
        outer_correct_x_[pos] =
            logical_gate_circuit(kN, LogicalGate{LogicalGateKind::X, layout_.data[pos - 1], {}});
        outer_correct_z_[pos] =
            logical_gate_circuit(kN, LogicalGate{LogicalGateKind::Z, layout_.data[pos - 1], {}});
    }

    ideal_inner_encode_data_ = parallel_inner_encodings(layout_.data);
    ideal_inner_encode_ancilla_ = parallel_inner_encodings(layout_.outer_ancilla);
    outer_encode_data_ = outer_encoding_circuit(layout_.data);
}

void Level1Gadgets::ideal_encode_outer(SimState& state, LogicalInput input, Rng& rng) const {
    ShotRecord scratch;
    execute_circuit(state, ideal_inner_encode_data_, NoiseModel::none(), rng, scratch);
    execute_circuit(state, outer_encode_data_, NoiseModel::none(), rng, scratch);
    if (input == LogicalInput::one) {
        Circuit flip = super_gate_step(layout_.data, GateKind::X);
        execute_circuit(state, flip, NoiseModel::none(), rng, scratch);
    } else if (input == LogicalInput::plus) {
        Circuit rotate = super_gate_step(layout_.data, GateKind::H);
        execute_circuit(state, rotate, NoiseModel::none(), rng, scratch);
    }
}

void Level1Gadgets::inner_ec_all(SimState& state, const NoiseModel& noise, Rng& rng,
                                 const GadgetOptions& options) const {
    for (const SteaneGadgets& gadgets : data_inner_ec_) {
        gadgets.ec_round(state, noise, rng, options);
    }
}

Word7 Level1Gadgets::decode_outer_word(const std::vector<uint8_t>& outcomes) const {
    size_t first = outcomes.size() - 49;
    Word7 outer = 0;
    for (int b = 0; b < 7; b++) {
        uint8_t bits[7];
        for (int i = 0; i < 7; i++) {
            bits[i] = outcomes[first + size_t(b) * 7 + i];
        }
        outer |= Word7(decode_measured_word(bits).logical_bit << b);
    }
    return outer;
}

void Level1Gadgets::prepare_outer_ideal(SimState& state, LogicalInput input, Rng& rng) const {
    ShotRecord scratch;
    execute_circuit(state, reset_outer_ancilla_, NoiseModel::none(), rng, scratch);
    execute_circuit(state, ideal_inner_encode_ancilla_, NoiseModel::none(), rng, scratch);
    execute_circuit(state, outer_encode_single_, NoiseModel::none(), rng, scratch);
    if (input == LogicalInput::plus) {
        execute_circuit(state, rotate_outer_plus_, NoiseModel::none(), rng, scratch);
    } else if (input == LogicalInput::one) {
        execute_circuit(state, flip_outer_one_, NoiseModel::none(), rng, scratch);
    }
}

void Level1Gadgets::prepare_outer_verified(SimState& state, LogicalInput input,
                                           const NoiseModel& noise, Rng& rng,
                                           const GadgetOptions& options,
                                           GadgetReport& report) const {
    // Reset of each 7-qubit block happens inside its inner verified prep.
    for (int attempt = 1; attempt <= options.max_retries; attempt++) {
        for (int b = 0; b < 7; b++) {
            PreparationOutcome prep = ancilla_inner_prep_[b].prepare_zero_verified(
                state, noise, rng, options.max_retries, &report);
            if (!prep.accepted) {
                throw AncillaExhausted("inner preparation inside the outer ancilla failed");
            }
            prep = partner_inner_prep_[b].prepare_zero_verified(state, noise, rng,
                                                                options.max_retries, &report);
            if (!prep.accepted) {
                throw AncillaExhausted("inner preparation inside the outer partner failed");
            }
        }
        ShotRecord record;
        execute_circuit(state, outer_encode_pair_, noise, rng, record);
        execute_circuit(state, outer_verify_, noise, rng, record);
        Word7 outer_raw = decode_outer_word(record.outcomes);
        auto fix = hamming().correct(outer_raw);
        if (hamming().codeword_parity(fix.corrected) == 0) {
            if (input == LogicalInput::plus) {
                ShotRecord scratch;
                execute_circuit(state, rotate_outer_plus_, noise, rng, scratch);
            }
            return;
        }
    }
    throw AncillaExhausted("outer ancilla verification failed " +
                           std::to_string(options.max_retries) + " times");
}

GadgetReport Level1Gadgets::outer_ec_round(SimState& state, const NoiseModel& noise, Rng& rng,
                                           const GadgetOptions& options) const {
    GadgetReport report;
    report.gadget = "outer_ec_round";

    auto obtain = [&](LogicalInput input) {
        if (options.ancilla == AncillaMode::ideal) {
            prepare_outer_ideal(state, input, rng);
            report.ancilla_blocks_consumed += 7;
        } else {
            prepare_outer_verified(state, input, noise, rng, options, report);
            report.ancilla_blocks_consumed += 14;
        }
    };

    obtain(LogicalInput::plus);
    ShotRecord record_x;
    execute_circuit(state, outer_extract_x_, noise, rng, record_x);
    Word7 raw_x = decode_outer_word(record_x.outcomes);
    uint8_t syndrome_x = hamming().syndrome(raw_x);
    int pos_x = hamming().syndrome_position(syndrome_x);
    report.syndromes.push_back(SyndromeRecord{'X', syndrome_x, pos_x, raw_x});
    if (pos_x) {
        ShotRecord scratch;
        execute_circuit(state, outer_correct_x_[pos_x], noise, rng, scratch);
    }

    obtain(LogicalInput::zero);
    ShotRecord record_z;
    execute_circuit(state, outer_extract_z_, noise, rng, record_z);
    Word7 raw_z = decode_outer_word(record_z.outcomes);
    uint8_t syndrome_z = hamming().syndrome(raw_z);
    int pos_z = hamming().syndrome_position(syndrome_z);
    report.syndromes.push_back(SyndromeRecord{'Z', syndrome_z, pos_z, raw_z});
    if (pos_z) {
        ShotRecord scratch;
        execute_circuit(state, outer_correct_z_[pos_z], noise, rng, scratch);
    }
    return report;
}

int Level1Gadgets::measure_outer_destructive(SimState& state, char basis, Rng& rng) const {
    Word7 outer = 0;
    for (int b = 0; b < 7; b++) {
        auto m = measure_logical_destructive(state, layout_.data[b], basis, rng);
        outer |= Word7(m.logical_bit << b);
    }
    auto fix = hamming().correct(outer);
    return hamming().codeword_parity(fix.corrected);
}

uint64_t Level1Gadgets::circuit_hash() const {
    uint64_t h = data_inner_ec_[0].ec_circuit_hash();
    h = fnv1a64(outer_encode_pair_.str(), h);
    h = fnv1a64(outer_verify_.str(), h);
    h = fnv1a64(rotate_outer_plus_.str(), h);
    h = fnv1a64(outer_extract_x_.str(), h);
    h = fnv1a64(outer_extract_z_.str(), h);
    return h;
}

ExperimentResult run_level1_memory(const MemoryExperiment& experiment, int workers,
                                   const ProgressFn& progress) {
    experiment.validate();
    if (experiment.backend != BackendKind::tableau) {
        throw ConfigError("the 49-qubit concatenated experiment needs the tableau backend");
    }
    static const Level1Gadgets gadgets;  // immutable circuits, shared by workers
    const int expected = experiment.input == LogicalInput::one ? 1 : 0;
    const char readout_basis = experiment.input == LogicalInput::plus ? 'X' : 'Z';

    GadgetOptions noisy_options;
    noisy_options.ancilla = AncillaMode::verified;
    noisy_options.max_retries = experiment.max_retries;
    GadgetOptions ideal_options;
    ideal_options.ancilla = AncillaMode::ideal;

    ShotTallies tallies = run_shot_pool(
        experiment.shots, workers, progress, [&]() -> std::function<ShotOutcome(uint64_t)> {
            auto state = std::make_shared<SimState>(BackendKind::tableau, Level1Layout::kRegister);
            return [&, state](uint64_t shot) -> ShotOutcome {
                state->reset();
                Rng rng = Rng::for_shot(experiment.seed, shot);
                gadgets.ideal_encode_outer(*state, experiment.input, rng);
                try {
                    for (int r = 0; r < experiment.rounds; r++) {
                        gadgets.inner_ec_all(*state, experiment.noise, rng, noisy_options);
                        gadgets.outer_ec_round(*state, experiment.noise, rng, noisy_options);
                    }
                } catch (const AncillaExhausted&) {
                    return ShotOutcome::abort;
                }
                gadgets.inner_ec_all(*state, NoiseModel::none(), rng, ideal_options);
                gadgets.outer_ec_round(*state, NoiseModel::none(), rng, ideal_options);
                int bit = gadgets.measure_outer_destructive(*state, readout_basis, rng);
                return bit != expected ? ShotOutcome::failure : ShotOutcome::ok;
            };
        });

    ExperimentResult result;
    result.shots = experiment.shots;
    result.failures = tallies.failures;
    result.aborts = tallies.aborts;
    result.seed = experiment.seed;
    result.circuit_hash = gadgets.circuit_hash();
    result.finalize();
    return result;
}

}  // namespace ftlab
