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

#include <cstdint>
#include <string>
#include <vector>

namespace ftlab {

enum class GateKind {
    H,
    S,
    S_DAG,
    X,
    Y,
    Z,
    CNOT,
    T,
    MEASURE_Z,
    MEASURE_X,
    PREP_ZERO,
};

const char* gate_name(GateKind g);
GateKind gate_from_name(const std::string& name);

inline bool is_two_qubit(GateKind g) { return g == GateKind::CNOT; }
inline bool is_measurement(GateKind g) {
    return g == GateKind::MEASURE_Z || g == GateKind::MEASURE_X;
}
inline bool is_unitary(GateKind g) {
    return !is_measurement(g) && g != GateKind::PREP_ZERO;
}

/// One gate at one point in time: the unit noise attaches to.
struct Location {
    GateKind gate;
    uint32_t q0;
    uint32_t q1 = 0;  // CNOT target; unused otherwise

    Location(GateKind g, uint32_t a) : gate(g), q0(a) {}
    Location(GateKind g, uint32_t a, uint32_t b) : gate(g), q0(a), q1(b) {}

    bool operator==(const Location&) const = default;
};

/// A time-ordered gate list. Each step holds disjoint locations; qubits not
/// touched in a step are idle locations for noise purposes.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(uint32_t n_qubits) : n_(n_qubits) {}

    uint32_t num_qubits() const { return n_; }
    const std::vector<std::vector<Location>>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

    /// Starts a new time step; subsequent appends land in it.
    void begin_step() { steps_.emplace_back(); }

    /// Appends to the current step, validating qubit ranges and disjointness.
    void append(Location loc);

    /// begin_step + append in one call.
    void append_step(Location loc) {
        begin_step();
        append(loc);
    }

    size_t num_locations() const;
    size_t num_measurements() const;

    /// One step per line, locations separated by "; ", e.g. "CNOT 1 8; H 3".
    std::string str() const;

    /// Parses the text format. A leading "qubits N" line fixes the register
    /// size; otherwise it is inferred from the largest index used.
    static Circuit parse(const std::string& text);

    /// FNV-1a hash of the canonical text, for result provenance.
    uint64_t content_hash() const;

    /// Concatenates another circuit's steps onto this one.
    void extend(const Circuit& tail);

    /// Zips another circuit's steps into this one side by side; the two must
    /// touch disjoint qubits within every shared step.
    void merge_parallel(const Circuit& other);

  private:
    uint32_t n_ = 0;
    std::vector<std::vector<Location>> steps_;
};

uint64_t fnv1a64(const std::string& data, uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace ftlab
