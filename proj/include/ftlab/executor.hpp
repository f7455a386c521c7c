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

#include <map>

#include "ftlab/noise.hpp"
#include "ftlab/sim_state.hpp"

namespace ftlab {

/// Outcomes and injected faults of one circuit execution.
struct ShotRecord {
    std::vector<uint8_t> outcomes;       // measurement bits in circuit order
    std::vector<ErrorEvent> injected;    // faults actually applied

    bool empty() const { return outcomes.empty() && injected.empty(); }
};

/// Execution knobs beyond the noise model itself.
struct RunOptions {
    /// Predetermined faults by site ordinal (adversarial experiments);
    /// when set, stochastic per-site sampling is skipped.
    const std::map<size_t, PauliOperator>* scripted = nullptr;
    /// Verify tableau invariants after every gate (tests only; slow).
    bool check_invariants = false;
    /// Record injected faults into the ShotRecord.
    bool log_errors = true;
};

/// Runs `circuit` on `state`, sampling noise per location: a fault lands
/// after each gate or reset, idle qubits of a step take idle-location noise
/// at p_idle, and measurements flip their classical outcome at p_meas.
/// Appends outcomes to `record`. Site ordinals match
/// enumerate_noise_sites(circuit).
void execute_circuit(SimState& state, const Circuit& circuit, const NoiseModel& noise, Rng& rng,
                     ShotRecord& record, const RunOptions& options = {});

/// Fresh-state convenience entry: |0...0>, execute, return the record.
/// Identical (circuit, backend, noise, seed) give identical records.
ShotRecord run_circuit(const Circuit& circuit, BackendKind backend, const NoiseModel& noise,
                       uint64_t seed);

/// As run_circuit but also hands back the final state for oracle checks.
std::pair<ShotRecord, SimState> run_circuit_keep_state(const Circuit& circuit,
                                                       BackendKind backend,
                                                       const NoiseModel& noise, uint64_t seed);

}  // namespace ftlab
