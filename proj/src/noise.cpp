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

#include "ftlab/noise.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftlab {

const char* noise_kind_name(NoiseKind k) {
    switch (k) {
        case NoiseKind::none: return "none";
        case NoiseKind::depolarizing: return "depolarizing";
        case NoiseKind::adversarial: return "adversarial";
        case NoiseKind::coherent: return "coherent";
    }
    return "?";
}

NoiseKind noise_kind_from_name(const std::string& name) {
    for (NoiseKind k : {NoiseKind::none, NoiseKind::depolarizing, NoiseKind::adversarial,
                        NoiseKind::coherent}) {
        if (name == noise_kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown noise kind: " + name);
}

const char* two_qubit_rule_name(TwoQubitRule r) {
    return r == TwoQubitRule::uniform15 ? "uniform15" : "independent_per_qubit";
}

TwoQubitRule two_qubit_rule_from_name(const std::string& name) {
    if (name == "uniform15") {
        return TwoQubitRule::uniform15;
    }
    if (name == "independent_per_qubit") {
        return TwoQubitRule::independent_per_qubit;
    }
    throw std::invalid_argument("unknown two-qubit rule: " + name);
}

const char* strategy_name(AdversaryStrategy s) {
    return s == AdversaryStrategy::all_y_heuristic ? "all_y_heuristic" : "exhaustive_worst_case";
}

AdversaryStrategy strategy_from_name(const std::string& name) {
    if (name == "all_y_heuristic") {
        return AdversaryStrategy::all_y_heuristic;
    }
    if (name == "exhaustive_worst_case") {
        return AdversaryStrategy::exhaustive_worst_case;
    }
    throw std::invalid_argument("unknown adversary strategy: " + name);
}

void NoiseModel::validate() const {
    for (double p : {p_gate, p_idle, p_meas}) {
        if (p < 0.0 || p > 1.0) {
            throw std::invalid_argument("noise probabilities must lie in [0,1]");
        }
    }
}

NoiseSiteTable enumerate_noise_sites(const Circuit& circuit) {
    NoiseSiteTable table;
    std::vector<char> touched(circuit.num_qubits());
    for (const auto& step : circuit.steps()) {
        std::fill(touched.begin(), touched.end(), 0);
        for (const Location& loc : step) {
            touched[loc.q0] = 1;
            if (is_two_qubit(loc.gate)) {
                touched[loc.q1] = 1;
            }
            table.sites.push_back(NoiseSite{false, loc});
        }
        for (uint32_t q = 0; q < circuit.num_qubits(); q++) {
            if (!touched[q]) {
                table.sites.push_back(NoiseSite{true, Location(GateKind::Z, q)});
            }
        }
    }
    return table;
}

PauliOperator two_qubit_pauli_by_index(uint32_t n, uint32_t qa, uint32_t qb, int index) {
    if (index < 0 || index > 14) {
        throw std::invalid_argument("two-qubit Pauli index must be 0..14");
    }
    static const char kinds[] = {'I', 'X', 'Y', 'Z'};
    int combined = index + 1;  // skip I(x)I
    char ka = kinds[combined >> 2];
    char kb = kinds[combined & 3];
    PauliOperator p = PauliOperator::single(n, qa, ka);
    return p * PauliOperator::single(n, qb, kb);
}

std::optional<PauliOperator> sample_depolarizing(const Location& loc, uint32_t n, double p,
                                                 TwoQubitRule rule, Rng& rng) {
    if (p <= 0.0) {
        return std::nullopt;
    }
    static const char kinds[] = {'X', 'Y', 'Z'};
    auto branch = [](double u, double p_total, int count) {
        return std::min(count - 1, int(u / p_total * count));
    };
    if (!is_two_qubit(loc.gate)) {
        double u = rng.uniform();
        if (u >= p) {
            return std::nullopt;
        }
        return PauliOperator::single(n, loc.q0, kinds[branch(u, p, 3)]);
    }
    if (rule == TwoQubitRule::uniform15) {
        double u = rng.uniform();
        if (u >= p) {
            return std::nullopt;
        }
        return two_qubit_pauli_by_index(n, loc.q0, loc.q1, branch(u, p, 15));
    }
    // independent_per_qubit: each qubit of the pair suffers its own
    // single-qubit depolarizing draw at rate p.
    std::optional<PauliOperator> out;
    for (uint32_t q : {loc.q0, loc.q1}) {
        double u = rng.uniform();
        if (u < p) {
            PauliOperator e = PauliOperator::single(n, q, kinds[branch(u, p, 3)]);
            out = out ? *out * e : e;
        }
    }
    return out;
}

std::vector<size_t> sample_adversarial_locations(const NoiseSiteTable& table, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("adversarial location probability must lie in [0,1]");
    }
    std::vector<size_t> hits;
    for (size_t i = 0; i < table.sites.size(); i++) {
        const NoiseSite& site = table.sites[i];
        if (!site.idle && is_measurement(site.location.gate)) {
            continue;
        }
        if (rng.uniform() < p) {
            hits.push_back(i);
        }
    }
    return hits;
}

namespace {

PauliOperator site_pauli(const NoiseSite& site, uint32_t n, int index) {
    // index enumerates 0..2 (X,Y,Z) for one qubit, 0..14 for a pair.
    static const char kinds[] = {'X', 'Y', 'Z'};
    if (site.idle || !is_two_qubit(site.location.gate)) {
        return PauliOperator::single(n, site.location.q0, kinds[index]);
    }
    return two_qubit_pauli_by_index(n, site.location.q0, site.location.q1, index);
}

int site_choice_count(const NoiseSite& site) {
    return (site.idle || !is_two_qubit(site.location.gate)) ? 3 : 15;
}

}  // namespace

AdversaryResult adversary_assign(const std::vector<size_t>& ordinals, const NoiseSiteTable& table,
                                 uint32_t n, AdversaryStrategy strategy,
                                 const FailureOracle& oracle, size_t max_exhaustive_locations) {
    AdversaryResult result;
    if (ordinals.empty()) {
        return result;
    }
    auto make_events = [&](const std::vector<int>& choice) {
        std::vector<ErrorEvent> events;
        events.reserve(ordinals.size());
        for (size_t k = 0; k < ordinals.size(); k++) {
            const NoiseSite& site = table.sites[ordinals[k]];
            events.push_back(ErrorEvent{ordinals[k], site, site_pauli(site, n, choice[k])});
        }
        return events;
    };

    auto heuristic = [&]() {
        // Y on every qubit: index 1 is Y for single sites, Y(x)Y for pairs.
        std::vector<int> choice(ordinals.size());
        for (size_t k = 0; k < ordinals.size(); k++) {
            const NoiseSite& site = table.sites[ordinals[k]];
            choice[k] = site_choice_count(site) == 3 ? 1 : 9;  // 9 -> (Y,Y)
        }
        return choice;
    };

    if (strategy == AdversaryStrategy::all_y_heuristic) {
        result.events = make_events(heuristic());
        if (oracle) {
            result.score = oracle(result.events);
        }
        return result;
    }

    if (ordinals.size() > max_exhaustive_locations) {
        result.events = make_events(heuristic());
        if (oracle) {
            result.score = oracle(result.events);
        }
        result.fell_back_to_heuristic = true;
        return result;
    }
    if (!oracle) {
        throw std::invalid_argument("exhaustive adversary requires a failure oracle");
    }

    // Odometer over all assignments; keep the first (lexicographically
    // smallest) maximizer.
    std::vector<int> choice(ordinals.size(), 0);
    std::vector<int> best_choice;
    double best_score = -1.0;
    for (;;) {
        std::vector<ErrorEvent> events = make_events(choice);
        double score = oracle(events);
        if (score > best_score) {
            best_score = score;
            best_choice = choice;
        }
        size_t k = choice.size();
        while (k > 0) {
            k--;
            if (++choice[k] < site_choice_count(table.sites[ordinals[k]])) {
                break;
            }
            choice[k] = 0;
            if (k == 0) {
                result.events = make_events(best_choice);
                result.score = best_score;
                return result;
            }
        }
    }
}

}  // namespace ftlab
