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

#include <string>
#include <vector>

#include "ftlab/threshold.hpp"

namespace ftlab {

enum class ExperimentKind {
    memory,
    level1,
    threshold_sweep,
    coherent_collapse,
    adversary_compare,
};

const char* experiment_kind_name(ExperimentKind k);

/// Parsed, schema-validated experiment description. Unknown keys anywhere
/// in the file are rejected with the offending key named.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::memory;
    BackendKind backend = BackendKind::tableau;
    LogicalInput input = LogicalInput::zero;
    int rounds = 1;
    uint64_t shots = 10000;
    uint64_t seed = 1;
    int max_retries = 10;
    NoiseModel noise;
    std::vector<double> p_grid;   // sweeps override noise.p_gate per point
    std::vector<double> thetas;   // coherent-collapse rotation angles
    std::string output_prefix = "run";
    bool trace_gadgets = false;   // JSON-lines gadget reports (small runs)

    /// Parses a JSON config file (or raw text), validating the schema.
    static ExperimentConfig parse_file(const std::string& path);
    static ExperimentConfig parse_text(const std::string& text);

    /// Canonical serialization; parse(serialize(c)) is semantically c.
    std::string canonical_text() const;

    void validate() const;
};

/// Record of one `run` invocation: what ran, with what inputs, and which
/// output files it produced.
struct RunManifest {
    std::string config_snapshot;  // canonical config text
    std::string tool_version;
    std::vector<std::pair<std::string, uint64_t>> circuit_hashes;
    double wall_seconds = 0;
    std::vector<std::string> output_files;

    std::string to_json() const;
};

}  // namespace ftlab
