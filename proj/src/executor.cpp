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

#include "ftlab/executor.hpp"

#include "ftlab/errors.hpp"

namespace ftlab {

namespace {

void apply_site_noise(SimState& state, const NoiseSite& site, size_t ordinal,
                      const NoiseModel& noise, Rng& rng, ShotRecord& record,
                      const RunOptions& options) {
    const uint32_t n = state.num_qubits();
    if (options.scripted) {
        auto it = options.scripted->find(ordinal);
        if (it != options.scripted->end()) {
            state.apply_pauli(it->second);
            if (options.log_errors) {
                record.injected.push_back(ErrorEvent{ordinal, site, it->second});
            }
        }
        return;
    }
    const double p = site.idle ? noise.p_idle : noise.p_gate;
    switch (noise.kind) {
        case NoiseKind::none:
            break;
        case NoiseKind::depolarizing: {
            Location loc = site.idle ? Location(GateKind::Z, site.location.q0) : site.location;
            if (auto e = sample_depolarizing(loc, n, p, noise.two_qubit_rule, rng)) {
                state.apply_pauli(*e);
                if (options.log_errors) {
                    record.injected.push_back(ErrorEvent{ordinal, site, *e});
                }
            }
            break;
        }
        case NoiseKind::adversarial: {
            if (noise.strategy != AdversaryStrategy::all_y_heuristic) {
                throw ConfigError(
                    "exhaustive adversary cannot run inline; use scripted errors from "
                    "adversary_assign");
            }
            if (rng.uniform() < p) {
                PauliOperator e = PauliOperator::single(n, site.location.q0, 'Y');
                if (!site.idle && is_two_qubit(site.location.gate)) {
                    e = e * PauliOperator::single(n, site.location.q1, 'Y');
                }
                state.apply_pauli(e);
                if (options.log_errors) {
                    record.injected.push_back(ErrorEvent{ordinal, site, e});
                }
            }
            break;
        }
        case NoiseKind::coherent: {
            // Systematic over-rotation: every gate location is followed by
            // Rz(theta) on its qubits; p_idle > 0 turns it on for idle slots.
            if (site.idle ? noise.p_idle > 0 : true) {
                for (uint32_t q : site.qubits()) {
                    state.apply_rz(q, noise.theta);
                }
            }
            break;
        }
    }
}

}  // namespace

void execute_circuit(SimState& state, const Circuit& circuit, const NoiseModel& noise, Rng& rng,
                     ShotRecord& record, const RunOptions& options) {
    noise.validate();
    if (circuit.num_qubits() > state.num_qubits()) {
        throw std::invalid_argument("circuit does not fit in the register");
    }
    if (noise.kind == NoiseKind::coherent && state.kind() == BackendKind::tableau) {
        throw ConfigError("coherent noise requires the dense backend");
    }
    // Idle sites only need visiting when something can strike them; their
    // ordinals are always counted so scripted-error indexing stays stable.
    const bool idle_active =
        options.scripted != nullptr ||
        (noise.p_idle > 0 && (noise.kind == NoiseKind::depolarizing ||
                              noise.kind == NoiseKind::adversarial ||
                              noise.kind == NoiseKind::coherent));
    size_t ordinal = 0;
    std::vector<char> touched(circuit.num_qubits());
    for (const auto& step : circuit.steps()) {
        size_t touched_count = 0;
        if (idle_active) {
            std::fill(touched.begin(), touched.end(), 0);
        }
        for (const Location& loc : step) {
            touched_count += is_two_qubit(loc.gate) ? 2 : 1;
            if (idle_active) {
                touched[loc.q0] = 1;
                if (is_two_qubit(loc.gate)) {
                    touched[loc.q1] = 1;
                }
            }
            if (is_measurement(loc.gate)) {
                int bit = state.measure(loc.q0, loc.gate == GateKind::MEASURE_Z ? 'Z' : 'X', rng);
                if (noise.p_meas > 0 && !options.scripted && rng.uniform() < noise.p_meas) {
                    bit ^= 1;
                }
                record.outcomes.push_back(uint8_t(bit));
                ordinal++;  // measurement sites occupy an ordinal but take no Pauli
                continue;
            }
            state.apply_gate(loc.gate, loc.q0, loc.q1, &rng);
            if (options.check_invariants && state.kind() == BackendKind::tableau) {
                state.tableau().check_invariants();
            }
            apply_site_noise(state, NoiseSite{false, loc}, ordinal, noise, rng, record, options);
            ordinal++;
        }
        if (idle_active) {
            for (uint32_t q = 0; q < circuit.num_qubits(); q++) {
                if (!touched[q]) {
                    apply_site_noise(state, NoiseSite{true, Location(GateKind::Z, q)}, ordinal,
                                     noise, rng, record, options);
                    ordinal++;
                }
            }
        } else {
            ordinal += circuit.num_qubits() - touched_count;
        }
    }
}

ShotRecord run_circuit(const Circuit& circuit, BackendKind backend, const NoiseModel& noise,
                       uint64_t seed) {
    SimState state(backend, circuit.num_qubits() == 0 ? 1 : circuit.num_qubits());
    ShotRecord record;
    Rng rng = Rng::for_shot(seed, 0);
    execute_circuit(state, circuit, noise, rng, record);
    return record;
}

std::pair<ShotRecord, SimState> run_circuit_keep_state(const Circuit& circuit,
                                                       BackendKind backend,
                                                       const NoiseModel& noise, uint64_t seed) {
    SimState state(backend, circuit.num_qubits() == 0 ? 1 : circuit.num_qubits());
    ShotRecord record;
    Rng rng = Rng::for_shot(seed, 0);
    execute_circuit(state, circuit, noise, rng, record);
    return {std::move(record), std::move(state)};
}

}  // namespace ftlab
