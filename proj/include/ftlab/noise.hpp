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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ftlab/circuit.hpp"
#include "ftlab/pauli.hpp"
#include "ftlab/rng.hpp"

namespace ftlab {

enum class NoiseKind { none, depolarizing, adversarial, coherent };
enum class TwoQubitRule { uniform15, independent_per_qubit };
enum class AdversaryStrategy { all_y_heuristic, exhaustive_worst_case };

const char* noise_kind_name(NoiseKind k);
NoiseKind noise_kind_from_name(const std::string& name);
const char* two_qubit_rule_name(TwoQubitRule r);
TwoQubitRule two_qubit_rule_from_name(const std::string& name);
const char* strategy_name(AdversaryStrategy s);
AdversaryStrategy strategy_from_name(const std::string& name);

/// Per-location error distribution bound to circuit execution.
struct NoiseModel {
    NoiseKind kind = NoiseKind::none;
    double p_gate = 0.0;
    double p_idle = 0.0;
    double p_meas = 0.0;
    TwoQubitRule two_qubit_rule = TwoQubitRule::uniform15;
    AdversaryStrategy strategy = AdversaryStrategy::all_y_heuristic;
    double theta = 0.0;  // coherent over-rotation angle

    bool is_none() const { return kind == NoiseKind::none; }
    void validate() const;

    static NoiseModel none() { return {}; }
    static NoiseModel depolarizing(double p) {
        NoiseModel m;
        m.kind = NoiseKind::depolarizing;
        m.p_gate = p;
        return m;
    }
};

/// One noise-eligible site: a gate/prep location, or the idle slot of a
/// qubit untouched during a time step.
struct NoiseSite {
    bool idle;
    Location location;  // for idle sites, gate is ignored and q0 is the qubit

    std::vector<uint32_t> qubits() const {
        if (idle || !is_two_qubit(location.gate)) {
            return {location.q0};
        }
        return {location.q0, location.q1};
    }
};

/// Flattened schedule of a circuit's noise sites in execution order: each
/// step's locations first, then that step's idle qubits in ascending order.
/// This ordering defines the site ordinals used everywhere.
struct NoiseSiteTable {
    std::vector<NoiseSite> sites;
    size_t size() const { return sites.size(); }
};
NoiseSiteTable enumerate_noise_sites(const Circuit& circuit);

/// A sampled fault bound to a site.
struct ErrorEvent {
    size_t site_ordinal;
    NoiseSite site;
    PauliOperator pauli;  // sized to the full register, supported on the site
};

/// Depolarizing draw for one location: nothing with probability 1-p, else
/// X/Y/Z each p/3 on one qubit, or one of the 15 nontrivial pair Paulis
/// each p/15 under uniform15.
std::optional<PauliOperator> sample_depolarizing(const Location& loc, uint32_t n, double p,
                                                 TwoQubitRule rule, Rng& rng);

/// Uniform choice index -> two-qubit Pauli: index in 0..14 maps to
/// (I,X,Y,Z) x (I,X,Y,Z) skipping identity-identity.
PauliOperator two_qubit_pauli_by_index(uint32_t n, uint32_t qa, uint32_t qb, int index);

/// Ordinals of gate/prep/idle sites struck by the adversarial channel: each
/// included independently with probability p. Measurement sites carry
/// classical flip noise instead and are never selected.
std::vector<size_t> sample_adversarial_locations(const NoiseSiteTable& table, double p, Rng& rng);

/// Judges one candidate error assignment; larger return = more harmful.
using FailureOracle = std::function<double(const std::vector<ErrorEvent>&)>;

/// Chooses error types for already-sampled sites. The heuristic assigns Y
/// everywhere (Y x Y on pairs); the exhaustive mode tries every Pauli
/// assignment (3 per single-qubit site, 15 per pair) and keeps the one the
/// oracle scores worst, breaking ties toward the lexicographically smallest
/// assignment. More than `max_exhaustive_locations` sites falls back to the
/// heuristic and flags it.
struct AdversaryResult {
    std::vector<ErrorEvent> events;
    double score = 0.0;
    bool fell_back_to_heuristic = false;
};
AdversaryResult adversary_assign(const std::vector<size_t>& ordinals, const NoiseSiteTable& table,
                                 uint32_t n, AdversaryStrategy strategy,
                                 const FailureOracle& oracle,
                                 size_t max_exhaustive_locations = 6);

}  // namespace ftlab
