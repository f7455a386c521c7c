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

#include "ftlab/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ftlab {

namespace {

const char* kGateNames[] = {"H",    "S", "S_DAG",     "X",         "Y",        "Z",
                            "CNOT", "T", "MEASURE_Z", "MEASURE_X", "PREP_ZERO"};

}  // namespace

const char* gate_name(GateKind g) {
    return kGateNames[static_cast<int>(g)];
}

GateKind gate_from_name(const std::string& name) {
    for (int k = 0; k < 11; k++) {
        if (name == kGateNames[k]) {
            return static_cast<GateKind>(k);
        }
    }
    throw std::invalid_argument("unknown gate: " + name);
}

void Circuit::append(Location loc) {
    if (steps_.empty()) {
        steps_.emplace_back();
    }
    if (loc.q0 >= n_ || (is_two_qubit(loc.gate) && loc.q1 >= n_)) {
        throw std::invalid_argument("qubit index out of range in circuit");
    }
    if (is_two_qubit(loc.gate) && loc.q0 == loc.q1) {
        throw std::invalid_argument("CNOT requires two distinct qubits");
    }
    for (const Location& other : steps_.back()) {
        bool clash = other.q0 == loc.q0 || (is_two_qubit(other.gate) && other.q1 == loc.q0) ||
                     (is_two_qubit(loc.gate) &&
                      (other.q0 == loc.q1 || (is_two_qubit(other.gate) && other.q1 == loc.q1)));
        if (clash) {
            throw std::invalid_argument("qubit used twice within one time step");
        }
    }
    steps_.back().push_back(loc);
}

size_t Circuit::num_locations() const {
    size_t total = 0;
    for (const auto& step : steps_) {
        total += step.size();
    }
    return total;
}

size_t Circuit::num_measurements() const {
    size_t total = 0;
    for (const auto& step : steps_) {
        for (const Location& loc : step) {
            total += is_measurement(loc.gate);
        }
    }
    return total;
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "qubits " << n_ << "\n";
    for (const auto& step : steps_) {
        for (size_t i = 0; i < step.size(); i++) {
            if (i) {
                out << "; ";
            }
            out << gate_name(step[i].gate) << " " << step[i].q0;
            if (is_two_qubit(step[i].gate)) {
                out << " " << step[i].q1;
            }
        }
        out << "\n";
    }
    return out.str();
}

Circuit Circuit::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Location>> raw_steps;
    uint32_t declared = 0;
    uint32_t max_index = 0;
    bool first = true;
    while (std::getline(in, line)) {
        // Strip comments and whitespace-only lines.
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        if (first) {
            std::istringstream header(line);
            std::string word;
            header >> word;
            if (word == "qubits") {
                if (!(header >> declared)) {
                    throw std::invalid_argument("malformed qubits header");
                }
                first = false;
                continue;
            }
        }
        first = false;
        raw_steps.emplace_back();
        std::string part;
        std::istringstream parts(line);
        while (std::getline(parts, part, ';')) {
            std::istringstream fields(part);
            std::string name;
            if (!(fields >> name)) {
                continue;
            }
            GateKind g = gate_from_name(name);
            uint32_t a, b = 0;
            if (!(fields >> a)) {
                throw std::invalid_argument("missing qubit index: " + part);
            }
            if (is_two_qubit(g) && !(fields >> b)) {
                throw std::invalid_argument("CNOT needs two qubit indices: " + part);
            }
            std::string extra;
            if (fields >> extra) {
                throw std::invalid_argument("trailing tokens in location: " + part);
            }
            raw_steps.back().emplace_back(is_two_qubit(g) ? Location(g, a, b) : Location(g, a));
            max_index = std::max({max_index, a, b});
        }
    }
    Circuit c(declared ? declared : max_index + 1);
    for (const auto& step : raw_steps) {
        c.begin_step();
        for (const Location& loc : step) {
            c.append(loc);
        }
    }
    return c;
}

uint64_t fnv1a64(const std::string& data, uint64_t seed) {
    uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t Circuit::content_hash() const {
    return fnv1a64(str());
}

void Circuit::extend(const Circuit& tail) {
    if (tail.n_ > n_) {
        throw std::invalid_argument("cannot extend with a larger circuit");
    }
    steps_.insert(steps_.end(), tail.steps_.begin(), tail.steps_.end());
}

void Circuit::merge_parallel(const Circuit& other) {
    if (other.n_ > n_) {
        throw std::invalid_argument("cannot merge a larger circuit");
    }
    size_t shared = std::min(steps_.size(), other.steps_.size());
    for (size_t s = 0; s < shared; s++) {
        // Re-append through the validator to keep step disjointness.
        std::vector<Location> mine = std::move(steps_[s]);
        steps_[s].clear();
        std::vector<Location>* target = &steps_[s];
        for (const Location& loc : mine) {
            target->push_back(loc);
        }
        for (const Location& loc : other.steps_[s]) {
            for (const Location& existing : *target) {
                bool clash =
                    existing.q0 == loc.q0 || (is_two_qubit(existing.gate) && existing.q1 == loc.q0) ||
                    (is_two_qubit(loc.gate) &&
                     (existing.q0 == loc.q1 || (is_two_qubit(existing.gate) && existing.q1 == loc.q1)));
                if (clash) {
                    throw std::invalid_argument("merge_parallel: qubit collision");
                }
            }
            target->push_back(loc);
        }
    }
    for (size_t s = shared; s < other.steps_.size(); s++) {
        steps_.push_back(other.steps_[s]);
    }
}

}  // namespace ftlab
