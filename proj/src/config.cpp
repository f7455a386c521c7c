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

#include "ftlab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ftlab/errors.hpp"
#include "ftlab/version.hpp"

namespace ftlab {

using nlohmann::json;

const char* experiment_kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::memory: return "memory";
        case ExperimentKind::level1: return "level1";
        case ExperimentKind::threshold_sweep: return "threshold-sweep";
        case ExperimentKind::coherent_collapse: return "coherent-collapse";
        case ExperimentKind::adversary_compare: return "adversary-compare";
    }
    return "?";
}

namespace {

ExperimentKind experiment_kind_from_name(const std::string& name) {
    for (ExperimentKind k :
         {ExperimentKind::memory, ExperimentKind::level1, ExperimentKind::threshold_sweep,
          ExperimentKind::coherent_collapse, ExperimentKind::adversary_compare}) {
        if (name == experiment_kind_name(k)) {
            return k;
        }
    }
    throw ConfigError("unknown experiment kind: \"" + name + "\"");
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key())) {
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
        }
    }
}

template <typename T>
T field_or(const json& obj, const std::string& key, T fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("field \"" + key + "\" has the wrong type");
    }
}

NoiseModel parse_noise(const json& obj) {
    reject_unknown_keys(
        obj, {"kind", "p_gate", "p_idle", "p_meas", "two_qubit_rule", "strategy", "theta"},
        "noise");
    NoiseModel noise;
    noise.kind = noise_kind_from_name(field_or<std::string>(obj, "kind", "none"));
    noise.p_gate = field_or<double>(obj, "p_gate", 0.0);
    noise.p_idle = field_or<double>(obj, "p_idle", 0.0);
    noise.p_meas = field_or<double>(obj, "p_meas", 0.0);
    noise.two_qubit_rule =
        two_qubit_rule_from_name(field_or<std::string>(obj, "two_qubit_rule", "uniform15"));
    noise.strategy =
        strategy_from_name(field_or<std::string>(obj, "strategy", "all_y_heuristic"));
    noise.theta = field_or<double>(obj, "theta", 0.0);
    return noise;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config root must be an object");
    }
    reject_unknown_keys(root,
                        {"experiment", "backend", "input", "rounds", "shots", "seed",
                         "max_retries", "noise", "p_grid", "thetas", "output_prefix",
                         "trace_gadgets"},
                        "config root");
    ExperimentConfig config;
    config.kind = experiment_kind_from_name(field_or<std::string>(root, "experiment", "memory"));
    std::string backend = field_or<std::string>(root, "backend", "tableau");
    if (backend == "tableau") {
        config.backend = BackendKind::tableau;
    } else if (backend == "dense") {
        config.backend = BackendKind::dense;
    } else {
        throw ConfigError("field \"backend\" must be \"tableau\" or \"dense\"");
    }
    try {
        config.input = logical_input_from_name(field_or<std::string>(root, "input", "0"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("field \"input\": ") + e.what());
    }
    config.rounds = field_or<int>(root, "rounds", 1);
    config.shots = field_or<uint64_t>(root, "shots", 10000);
    config.seed = field_or<uint64_t>(root, "seed", 1);
    config.max_retries = field_or<int>(root, "max_retries", 10);
    if (root.contains("noise")) {
        if (!root.at("noise").is_object()) {
            throw ConfigError("field \"noise\" must be an object");
        }
        try {
            config.noise = parse_noise(root.at("noise"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("noise block: ") + e.what());
        }
    }
    config.p_grid = field_or<std::vector<double>>(root, "p_grid", {});
    config.thetas = field_or<std::vector<double>>(root, "thetas", {});
    config.output_prefix = field_or<std::string>(root, "output_prefix", "run");
    config.trace_gadgets = field_or<bool>(root, "trace_gadgets", false);
    config.validate();
    return config;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str());
}

void ExperimentConfig::validate() const {
    if (rounds < 1) {
        throw ConfigError("field \"rounds\" must be >= 1");
    }
    if (shots < 1) {
        throw ConfigError("field \"shots\" must be >= 1");
    }
    if (max_retries < 1) {
        throw ConfigError("field \"max_retries\" must be >= 1");
    }
    noise.validate();
    for (double p : p_grid) {
        if (p < 0 || p > 1) {
            throw ConfigError("p_grid entries must lie in [0,1]");
        }
    }
    switch (kind) {
        case ExperimentKind::memory:
            if (noise.kind == NoiseKind::coherent && backend == BackendKind::tableau) {
                throw ConfigError("coherent noise requires \"backend\": \"dense\"");
            }
            break;
        case ExperimentKind::level1:
            if (backend != BackendKind::tableau) {
                throw ConfigError("level1 runs on the tableau backend only");
            }
            if (noise.kind == NoiseKind::coherent) {
                throw ConfigError("level1 supports Pauli-type noise only");
            }
            break;
        case ExperimentKind::threshold_sweep:
            if (p_grid.size() < 3) {
                throw ConfigError("threshold-sweep needs a p_grid with >= 3 points");
            }
            break;
        case ExperimentKind::coherent_collapse:
            if (thetas.empty()) {
                throw ConfigError("coherent-collapse needs a \"thetas\" list");
            }
            break;
        case ExperimentKind::adversary_compare:
            if (p_grid.empty()) {
                throw ConfigError("adversary-compare needs a p_grid");
            }
            break;
    }
}

std::string ExperimentConfig::canonical_text() const {
    json root;
    root["experiment"] = experiment_kind_name(kind);
    root["backend"] = backend == BackendKind::tableau ? "tableau" : "dense";
    root["input"] = logical_input_name(input);
    root["rounds"] = rounds;
    root["shots"] = shots;
    root["seed"] = seed;
    root["max_retries"] = max_retries;
    root["noise"] = {
        {"kind", noise_kind_name(noise.kind)},
        {"p_gate", noise.p_gate},
        {"p_idle", noise.p_idle},
        {"p_meas", noise.p_meas},
        {"two_qubit_rule", two_qubit_rule_name(noise.two_qubit_rule)},
        {"strategy", strategy_name(noise.strategy)},
        {"theta", noise.theta},
    };
    root["p_grid"] = p_grid;
    root["thetas"] = thetas;
    root["output_prefix"] = output_prefix;
    root["trace_gadgets"] = trace_gadgets;
    return root.dump(2) + "\n";
}

std::string RunManifest::to_json() const {
    json root;
    root["config"] = json::parse(config_snapshot);
    root["tool_version"] = tool_version;
    json hashes = json::object();
    for (const auto& [name, hash] : circuit_hashes) {
        std::ostringstream hex;
        hex << std::hex << hash;
        hashes[name] = hex.str();
    }
    root["circuit_hashes"] = hashes;
    root["wall_seconds"] = wall_seconds;
    root["outputs"] = output_files;
    return root.dump(2) + "\n";
}

}  // namespace ftlab
